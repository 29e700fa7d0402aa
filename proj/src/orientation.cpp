#include "mdsurf/orientation.hpp"

#include <queue>

#include "mdsurf/error.hpp"

namespace mdsurf {

unsigned n_count(const Orientation& l, const std::vector<Dart>& walk) {
    unsigned n = 0;
    for (Dart d : walk) n += l.co_oriented(d);
    return n;
}

bool is_kasteleyn(const Graph&, const Faces& faces, const Orientation& l) {
    for (std::size_t f = 0; f < faces.orbits.size(); ++f)
        if (faces.interior(f) && n_count(l, faces.orbits[f]) % 2 == 0)
            return false;
    return true;
}

bool disk_parities_match(const Graph& g, const Orientation& l, unsigned beta) {
    for (std::size_t k = 0; k < g.boundary.size(); ++k) {
        unsigned want = ((beta >> k) & 1u) ^ 1u;
        if (n_count(l, g.boundary[k]) % 2 != want) return false;
    }
    return true;
}

namespace {

// Tail darts of the sector pattern on circuit k: every circuit edge runs
// from the larger label to the smaller, except that a set sector bit
// reverses the closing edge (label N back to label 1).
std::vector<Dart> pattern_tails(const Graph& g, std::size_t k, bool bit) {
    std::vector<Dart> walk = g.label_walk(k);
    std::size_t n = walk.size();
    std::vector<Dart> tails(n);
    for (std::size_t m = 0; m < n; ++m) {
        // walk[m] runs label-ascending; only the closing edge of an unset
        // sector runs with the walk.
        bool closing = m + 1 == n;
        tails[m] = (closing && !bit) ? walk[m] : Map::alpha(walk[m]);
    }
    return tails;
}

} // namespace

bool matches_boundary_pattern(const Graph& g, const Orientation& l,
                              unsigned beta) {
    for (std::size_t k = 0; k < g.boundary.size(); ++k)
        for (Dart t : pattern_tails(g, k, (beta >> k) & 1u))
            if (l.tail_dart(Map::edge_of(t)) != t) return false;
    return true;
}

Orientation build_base_orientation(const Graph& g, const Faces& faces,
                                   unsigned beta) {
    check(static_cast<unsigned>(__builtin_popcount(beta)) % 2 ==
              g.map.vertex_count() % 2,
          "sector parity does not match vertex parity");

    Orientation l(g.map.edge_count());
    for (std::size_t k = 0; k < g.boundary.size(); ++k) {
        check(g.boundary[k].size() % 2 == 0, "circuit length must be even");
        for (Dart t : pattern_tails(g, k, (beta >> k) & 1u))
            l.bits[Map::edge_of(t)] = t & 1u;
    }

    // Spanning tree of interior faces through free edges, then flip each
    // face's parent edge bottom-up until its boundary count is odd.
    auto circuit_edge = g.circuit_edge_mask();
    std::size_t nf = faces.orbits.size();
    std::vector<int> parent_face(nf, -2);
    std::vector<EdgeId> parent_edge(nf, 0);
    std::vector<std::size_t> order;

    std::size_t root = nf;
    for (std::size_t i = 0; i < nf && root == nf; ++i)
        if (faces.interior(i)) root = i;
    if (root < nf) {
        parent_face[root] = -1;
        std::queue<std::size_t> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            std::size_t f = bfs.front();
            bfs.pop();
            order.push_back(f);
            for (Dart d : faces.orbits[f]) {
                EdgeId e = Map::edge_of(d);
                if (circuit_edge[e]) continue;
                std::size_t o = faces.face_of_dart[Map::alpha(d)];
                if (o == f || parent_face[o] != -2) continue;
                parent_face[o] = static_cast<int>(f);
                parent_edge[o] = e;
                bfs.push(o);
            }
        }
        for (std::size_t i = 0; i < nf; ++i)
            if (faces.interior(i))
                check(parent_face[i] != -2,
                      "interior faces not connected through interior edges");
        for (std::size_t i = order.size(); i-- > 1;) {
            std::size_t f = order[i];
            if (n_count(l, faces.orbits[f]) % 2 == 0) l.flip(parent_edge[f]);
        }
        check(n_count(l, faces.orbits[root]) % 2 == 1,
              "root face parity came out even");
    }

    check(is_kasteleyn(g, faces, l), "face parities not all odd");
    check(disk_parities_match(g, l, beta), "disk parities off pattern");
    check(matches_boundary_pattern(g, l, beta), "pattern disturbed");
    return l;
}

namespace {

void flip_crossing_set(const Graph& g, const std::vector<bool>& crossed,
                       Orientation& l) {
    auto circuit_edge = g.circuit_edge_mask();
    for (EdgeId e = 0; e < g.map.edge_count(); ++e)
        if (crossed[e]) {
            check(!circuit_edge[e], "crossing set touches a circuit edge");
            l.flip(e);
        }
}

} // namespace

void fix_gamma_parities(const Graph& g, const HomologyBasis& basis,
                        Orientation& l) {
    std::size_t n = basis.gens.size();
    if (n == 0) return;
    std::vector<bool> acc(g.map.edge_count(), false);
    for (std::size_t i = 0; i < n; ++i)
        if (n_count(l, basis.gens[i].gamma) % 2 == 0)
            for (EdgeId e = 0; e < g.map.edge_count(); ++e)
                if (basis.dual_crossed[i][e]) acc[e] = !acc[e];
    flip_crossing_set(g, acc, l);
    for (std::size_t i = 0; i < n; ++i)
        check(n_count(l, basis.gens[i].gamma) % 2 == 1,
              "generator walk parity still even");
}

void flip_epsilon(const HomologyBasis& basis, unsigned eps, Orientation& l) {
    std::vector<bool> acc(l.bits.size(), false);
    for (std::size_t i = 0; i < basis.gens.size(); ++i)
        if ((eps >> i) & 1u)
            for (EdgeId e = 0; e < l.bits.size(); ++e)
                if (basis.gens[i].crossed[e]) acc[e] = !acc[e];
    for (EdgeId e = 0; e < l.bits.size(); ++e)
        if (acc[e]) l.flip(e);
}

} // namespace mdsurf
