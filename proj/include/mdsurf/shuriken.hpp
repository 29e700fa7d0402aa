// Ring-and-hub augmentation: gluing a cycle of auxiliary vertices (plus a
// central hub when the sector bit is set) into each boundary disk turns the
// sector's monomer-dimer coverings into perfect matchings of a closed map.
// Two cross-checks tie the construction to the Pfaffian engine: a
// weight-preserving covering correspondence with an explicit multiplicity,
// and an exact identity between the augmented adjacency Pfaffian and the
// sector matrix Pfaffian.
#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mdsurf/engine.hpp"
#include "mdsurf/graph.hpp"
#include "mdsurf/oracle.hpp"
#include "mdsurf/orientation.hpp"
#include "mdsurf/ring.hpp"
#include "mdsurf/skew.hpp"
#include "mdsurf/topology.hpp"

namespace mdsurf {

struct Shuriken {
    Graph graph;              // closed map; original edges keep their ids
    unsigned beta = 0;
    std::size_t original_edges = 0;
    // Fixed orientation rule for each appended edge, indexed e - original.
    std::vector<char> new_edge_bits;
    // Matrix row per vertex: circuit blocks (boundary labels, then ring,
    // then hub) followed by the interior vertices in id order.
    std::vector<std::size_t> matrix_index;
    long multiplicity = 1; // 2^(#clear circuits) * prod of set-circuit sizes
    bool negate = false;   // sign relating the two Pfaffians
};

// Builds the augmentation of a preprocessed graph for one sector. Each
// circuit of size N gains ring vertices z_1..z_N inside its disk, z_j tied
// to the j-th and (j+1)-th circuit vertices by blade edges carrying those
// vertices' weights; ring edges close the cycle, and a set sector bit adds a
// hub joined to every z_j. Ring and hub edges weigh one. The result has no
// boundary and the same genus.
Shuriken build_shuriken(const Graph& g, unsigned beta);

// Copies a sector-pattern orientation onto the augmentation and orients the
// appended edges by the fixed local rule. The combined orientation makes
// every face of the closed map odd (checked).
Orientation extend_orientation(const Shuriken& s, const Orientation& base);

// Constructive check of the covering correspondence, which implies
//   Z_dimer(augmented) == multiplicity * Z_sector(g).
// Every dimer cover of the augmentation is restricted to the original
// edges; the restriction must be the dimer part of a covering in sector
// `beta` (matched blades mark the monomers), every sector covering must
// appear, each exactly `multiplicity` times, and the grouped weights must
// agree. Holds for every sector mask; a parity-mismatched mask makes both
// sides empty. `cap` bounds the augmented vertex count fed to the oracle.
template <class R>
bool verify_cover_correspondence(const Graph& g, unsigned beta,
                                 std::size_t cap = 28) {
    Shuriken s = build_shuriken(g, beta);
    auto circuit_of = g.vertex_circuit();
    VertexId v0 = static_cast<VertexId>(g.map.vertex_count());

    // Group augmented covers by restriction; track count and total weight.
    std::map<std::vector<EdgeId>, std::pair<long, R>> groups;
    bool partitioned = true;
    enumerate_dimers(
        s.graph,
        [&](const std::vector<EdgeId>& dimers) {
            std::vector<EdgeId> restriction;
            unsigned mask = 0;
            R w = RingOps<R>::one();
            for (EdgeId e : dimers) {
                w *= RingOps<R>::from_weight(s.graph.edge_weights[e],
                                             s.graph.symbols);
                if (e < s.original_edges) {
                    restriction.push_back(e);
                    continue;
                }
                auto [x, y] = s.graph.map.edge_ends(e);
                VertexId v = x < v0 ? x : y; // blade's circuit endpoint
                if (v < v0) mask ^= 1u << circuit_of[v];
            }
            if (mask != beta) {
                partitioned = false;
                return;
            }
            auto it = groups.try_emplace(std::move(restriction), 0,
                                         RingOps<R>::zero());
            it.first->second.first += 1;
            it.first->second.second += w;
        },
        cap);
    if (!partitioned) return false;

    // The sector coverings of the original graph, keyed by dimer part
    // (which determines the monomers).
    std::map<std::vector<EdgeId>, R> sector;
    enumerate_md(
        g,
        [&](const MdCovering& c) {
            unsigned mask = 0;
            for (VertexId v : c.monomers) mask ^= 1u << circuit_of[v];
            if (mask == beta) sector.emplace(c.dimers, covering_weight<R>(g, c));
        },
        cap);

    if (groups.size() != sector.size()) return false;
    R factor = RingOps<R>::from_int(s.multiplicity);
    for (const auto& [restriction, slot] : groups) {
        auto it = sector.find(restriction);
        if (it == sector.end()) return false;
        if (slot.first != s.multiplicity) return false;
        if (!(slot.second == factor * it->second)) return false;
    }
    return true;
}

// Exact Pfaffian identity for a sector-pattern orientation `base`:
//   Pf(A(augmented)) == +/- multiplicity * Pf(M_sector(g)),
// the augmented matrix ordered by `matrix_index` and the sector matrix by
// the circuit labelling.
template <class R>
bool verify_pfaffian_identity(const Graph& g, unsigned beta,
                              const Orientation& base) {
    Shuriken s = build_shuriken(g, beta);
    Orientation lbar = extend_orientation(s, base);

    Labelling aug;
    aug.index_of_vertex = s.matrix_index;
    aug.size = s.graph.map.vertex_count();
    R lhs = pfaffian(adjacency_matrix<R>(s.graph, aug, lbar));

    R rhs = pfaffian(modified_matrix<R>(g, make_labelling(g, beta), base));
    rhs *= RingOps<R>::from_int(s.multiplicity);
    if (s.negate) rhs = -rhs;
    return lhs == rhs;
}

// Same identity with the engine's own orientation for the sector (pattern
// base plus generator-parity fixes). Requires an admissible mask.
template <class R>
bool verify_pfaffian_identity(const Graph& g, unsigned beta) {
    Faces faces = close_surface(g);
    Orientation base = build_base_orientation(g, faces, beta);
    fix_gamma_parities(g, homology_basis(g), base);
    return verify_pfaffian_identity<R>(g, beta, base);
}

} // namespace mdsurf
