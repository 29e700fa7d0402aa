// Exact partition functions via Pfaffians.
//
// For each boundary sector (a parity bit per circuit) the engine labels the
// vertices circuit by circuit, builds the sector's skew matrix — edge terms
// signed by a base orientation, monomer terms along each circuit block — and
// sums signed Pfaffians over the 4^genus orientation twists. The sector value
// is |sum| / 2^genus; the partition function is the sum over sectors whose
// total parity matches the vertex count.
#pragma once

#include <bit>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "mdsurf/error.hpp"
#include "mdsurf/graph.hpp"
#include "mdsurf/orientation.hpp"
#include "mdsurf/preprocess.hpp"
#include "mdsurf/ring.hpp"
#include "mdsurf/skew.hpp"
#include "mdsurf/topology.hpp"

namespace mdsurf {

// Matrix index assignment for one sector: each circuit's vertices in walk
// order from its lowest vertex, followed by the circuit's virtual index when
// the sector bit is set, then the interior vertices in id order.
struct Labelling {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr VertexId no_vertex = static_cast<VertexId>(-1);

    std::vector<std::size_t> index_of_vertex;
    std::vector<VertexId> vertex_of_index;        // no_vertex for virtuals
    std::vector<std::vector<std::size_t>> blocks; // per circuit, ascending
    std::vector<std::size_t> virtual_of_circuit;  // npos when bit unset
    std::size_t size = 0;
};

Labelling make_labelling(const Graph& g, unsigned beta);

// Sector masks whose bit parity matches the vertex-count parity; every other
// sector holds no coverings. Ascending.
std::vector<unsigned> admissible_sectors(const Graph& g);

// Parity of sum_{i<j} eps_i eps_j q_ij — the sign carried by twist eps.
bool epsilon_sign_negative(const std::vector<std::vector<int>>& q, unsigned eps);

template <class R>
R index_weight(const Graph& g, const Labelling& lab, std::size_t idx) {
    VertexId v = lab.vertex_of_index[idx];
    if (v == Labelling::no_vertex) return RingOps<R>::one();
    return RingOps<R>::from_weight(g.vertex_weights[v], g.symbols);
}

// Edge terms only: entry (i, j) collects +x_e for edges directed from index
// i to index j and -x_e for the reverse, over all parallel edges.
template <class R>
SkewMatrix<R> adjacency_matrix(const Graph& g, const Labelling& lab,
                               const Orientation& l) {
    SkewMatrix<R> a(lab.size);
    for (EdgeId e = 0; e < g.map.edge_count(); ++e) {
        Dart t = l.tail_dart(e);
        std::size_t i = lab.index_of_vertex[g.map.tail(t)];
        std::size_t j = lab.index_of_vertex[g.map.head(t)];
        R x = RingOps<R>::from_weight(g.edge_weights[e], g.symbols);
        if (i < j)
            a.add(i, j, x);
        else
            a.add(j, i, -x);
    }
    return a;
}

// Edge terms plus monomer terms: within each circuit block (virtual index
// included, weight one) the pair p < q contributes (-1)^(p+q) y_p y_q.
template <class R>
SkewMatrix<R> modified_matrix(const Graph& g, const Labelling& lab,
                              const Orientation& l) {
    SkewMatrix<R> a = adjacency_matrix<R>(g, lab, l);
    for (const auto& block : lab.blocks) {
        for (std::size_t s = 0; s < block.size(); ++s)
            for (std::size_t t = s + 1; t < block.size(); ++t) {
                std::size_t p = block[s];
                std::size_t q = block[t];
                R term = index_weight<R>(g, lab, p) * index_weight<R>(g, lab, q);
                if ((p + q) % 2 != 0) term = -term;
                a.add(p, q, term);
            }
    }
    return a;
}

template <class R>
struct SectorReport {
    unsigned beta = 0;
    std::vector<R> terms; // signed Pfaffian per twist, ascending twist mask
    R inner = RingOps<R>::zero();
    R value = RingOps<R>::zero(); // |inner| / 2^genus
};

template <class R>
struct EngineResult {
    R total = RingOps<R>::zero();
    std::vector<SectorReport<R>> sectors;
};

namespace detail {

template <class R>
R sector_term(const Graph& g, const HomologyBasis& basis, const Labelling& lab,
              const Orientation& base, unsigned eps) {
    Orientation l = base;
    flip_epsilon(basis, eps, l);
    SkewMatrix<R> m = modified_matrix<R>(g, lab, l);
    R pf = pfaffian(m);
    if (epsilon_sign_negative(basis.intersections, eps)) pf = -pf;
    return pf;
}

// Evaluates the given sectors of a graph with proper, even, vertex-disjoint
// circuits. Work is split over (sector, twist) slots; results are identical
// for any job count because the reduction order is fixed.
template <class R>
EngineResult<R> evaluate(const Graph& g, const std::vector<unsigned>& sectors,
                         unsigned jobs) {
    require(jobs >= 1, "jobs must be at least 1");
    Faces faces = close_surface(g);
    HomologyBasis basis = homology_basis(g);
    unsigned genus = g.genus();
    std::size_t eps_count = std::size_t(1) << basis.gens.size();

    std::vector<Labelling> labs;
    std::vector<Orientation> bases;
    labs.reserve(sectors.size());
    bases.reserve(sectors.size());
    for (unsigned beta : sectors) {
        labs.push_back(make_labelling(g, beta));
        Orientation k = build_base_orientation(g, faces, beta);
        fix_gamma_parities(g, basis, k);
        bases.push_back(std::move(k));
    }

    std::vector<std::vector<R>> terms(sectors.size());
    for (auto& t : terms) t.assign(eps_count, RingOps<R>::zero());

    auto run_slot = [&](std::size_t slot) {
        std::size_t b = slot / eps_count;
        unsigned eps = static_cast<unsigned>(slot % eps_count);
        terms[b][eps] = sector_term<R>(g, basis, labs[b], bases[b], eps);
    };
    std::size_t slot_count = sectors.size() * eps_count;
    std::size_t workers = std::min<std::size_t>(jobs, slot_count);
    if (workers <= 1) {
        for (std::size_t s = 0; s < slot_count; ++s) run_slot(s);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                try {
                    for (std::size_t s = w; s < slot_count; s += workers)
                        run_slot(s);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    EngineResult<R> result;
    result.sectors.reserve(sectors.size());
    for (std::size_t b = 0; b < sectors.size(); ++b) {
        SectorReport<R> rep;
        rep.beta = sectors[b];
        rep.terms = std::move(terms[b]);
        for (const R& t : rep.terms) rep.inner += t;
        rep.value =
            RingOps<R>::abs_normalize(RingOps<R>::div_pow2_exact(rep.inner, genus));
        check(RingOps<R>::all_nonnegative(rep.value),
              "sector value has a negative coefficient");
        result.total += rep.value;
        result.sectors.push_back(std::move(rep));
    }
    return result;
}

} // namespace detail

// All admissible sectors of a graph whose circuits are already proper, even
// and vertex-disjoint (see preprocess).
template <class R>
EngineResult<R> evaluate_sectors(const Graph& g, unsigned jobs = 1) {
    return detail::evaluate<R>(g, admissible_sectors(g), jobs);
}

// One sector's full report on a preprocessed graph. Sectors with the wrong
// parity hold no coverings and report zero without touching the surface
// machinery.
template <class R>
EngineResult<R> evaluate_sector(const Graph& g, unsigned beta,
                                unsigned jobs = 1) {
    require(g.num_boundary() < 32 && beta < (1u << g.num_boundary()),
            "sector mask out of range");
    if (std::popcount(beta) % 2 !=
        static_cast<int>(g.map.vertex_count() % 2)) {
        EngineResult<R> r;
        r.sectors.push_back(SectorReport<R>{beta, {}, RingOps<R>::zero(),
                                            RingOps<R>::zero()});
        return r;
    }
    return detail::evaluate<R>(g, {beta}, jobs);
}

// One sector's value alone.
template <class R>
R partial_Z(const Graph& g, unsigned beta, unsigned jobs = 1) {
    return evaluate_sector<R>(g, beta, jobs).total;
}

// The boundary monomer-dimer partition function: preprocesses a copy (walk
// normalization plus parity padding, both weight-preserving) and sums the
// sector values.
template <class R>
R boundary_md_partition(const Graph& g, unsigned jobs = 1) {
    Graph h = g;
    preprocess(h);
    return evaluate_sectors<R>(h, jobs).total;
}

// Dimer partition function of the underlying map. Dimer covers ignore
// boundary marks, so circuits are dropped and the single remaining sector has
// no monomer terms; odd vertex counts admit no cover at all.
template <class R>
R dimer_partition(const Graph& g, unsigned jobs = 1) {
    if (g.map.vertex_count() % 2 != 0) return RingOps<R>::zero();
    Graph h = g;
    h.boundary.clear();
    return evaluate_sectors<R>(h, jobs).total;
}

} // namespace mdsurf
