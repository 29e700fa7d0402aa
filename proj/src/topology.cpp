#include "mdsurf/topology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "mdsurf/error.hpp"

namespace mdsurf {

Faces close_surface(const Graph& g) {
    Faces f;
    f.orbits = g.map.face_orbits();
    f.glued_circuit.assign(f.orbits.size(), -1);
    f.face_of_dart.assign(g.map.dart_count(), 0);
    for (std::size_t i = 0; i < f.orbits.size(); ++i)
        for (Dart d : f.orbits[i]) f.face_of_dart[d] = i;
    for (std::size_t k = 0; k < g.boundary.size(); ++k) {
        std::size_t i = f.face_of_dart[g.boundary[k][0]];
        check(f.glued_circuit[i] < 0, "boundary walks share a face");
        f.glued_circuit[i] = static_cast<int>(k);
    }
    return f;
}

namespace {

// Gauss-Jordan inverse of a 0/1 matrix mod 2; invariant_error if singular.
std::vector<std::vector<int>> invert_mod2(std::vector<std::vector<int>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        check(p < n, "crossing matrix is singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] ^= a[c][j];
                inv[r][j] ^= inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace

HomologyBasis homology_basis(const Graph& g) {
    const Map& m = g.map;
    Faces faces = close_surface(g);
    std::size_t nf = faces.orbits.size();
    auto circuit_edge = g.circuit_edge_mask();
    unsigned genus = g.genus();

    // Dual spanning tree. Interior faces first, breadth-first through
    // non-circuit edges from the lowest interior face.
    std::vector<char> in_cotree(m.edge_count(), 0);
    std::vector<int> parent_face(nf, -2); // -2 unseen, -1 root
    std::vector<EdgeId> parent_edge(nf, 0);

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
            for (Dart d : faces.orbits[f]) {
                EdgeId e = Map::edge_of(d);
                if (circuit_edge[e]) continue;
                std::size_t o = faces.face_of_dart[Map::alpha(d)];
                if (o == f || parent_face[o] != -2) continue;
                parent_face[o] = static_cast<int>(f);
                parent_edge[o] = e;
                in_cotree[e] = 1;
                bfs.push(o);
            }
        }
    }
    for (std::size_t i = 0; i < nf; ++i)
        if (faces.interior(i))
            check(parent_face[i] != -2,
                  "interior faces not connected through interior edges");

    // Each glued disk hangs off the tree as a leaf, through the lowest edge
    // of its circuit. Leftover edges therefore never touch a disk.
    for (std::size_t k = 0; k < g.boundary.size(); ++k) {
        Dart low = g.boundary[k][0];
        for (Dart d : g.boundary[k])
            if (Map::edge_of(d) < Map::edge_of(low)) low = d;
        std::size_t disk = faces.face_of_dart[low];
        std::size_t other = faces.face_of_dart[Map::alpha(low)];
        check(faces.interior(other), "circuit edge between two disks");
        parent_face[disk] = static_cast<int>(other);
        parent_edge[disk] = Map::edge_of(low);
        in_cotree[Map::edge_of(low)] = 1;
    }

    // Primal spanning tree on the complement of the cotree: the remaining
    // circuit edges form paths and always join; then interior edges greedily.
    std::vector<VertexId> uf(m.vertex_count());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](VertexId v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    std::vector<char> in_primal(m.edge_count(), 0);
    std::size_t primal_size = 0;
    auto try_join = [&](EdgeId e) {
        auto [a, b] = m.edge_ends(e);
        VertexId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        uf[ra] = rb;
        in_primal[e] = 1;
        ++primal_size;
        return true;
    };
    for (EdgeId e = 0; e < m.edge_count(); ++e)
        if (circuit_edge[e] && !in_cotree[e])
            check(try_join(e), "circuit path edge closed a cycle");
    for (EdgeId e = 0; e < m.edge_count(); ++e)
        if (!circuit_edge[e] && !in_cotree[e]) try_join(e);
    check(primal_size + 1 == m.vertex_count(), "primal tree does not span");

    std::vector<EdgeId> leftover;
    for (EdgeId e = 0; e < m.edge_count(); ++e)
        if (!in_cotree[e] && !in_primal[e]) leftover.push_back(e);
    check(leftover.size() == 2 * genus, "leftover edge count is not 2g");

    HomologyBasis basis;
    for (EdgeId e : leftover) {
        check(!circuit_edge[e], "leftover edge lies on a circuit");
        std::size_t fa = faces.face_of_dart[Map::edge_dart(e, 0)];
        std::size_t fb = faces.face_of_dart[Map::edge_dart(e, 1)];
        check(faces.interior(fa) && faces.interior(fb),
              "leftover edge touches a disk");

        // Face path fa -> LCA -> fb in the dual tree.
        auto climb = [&](std::size_t f) {
            std::vector<std::size_t> chain{f};
            while (parent_face[chain.back()] >= 0)
                chain.push_back(parent_face[chain.back()]);
            return chain;
        };
        std::vector<std::size_t> ca = climb(fa), cb = climb(fb);
        std::vector<char> on_a(nf, 0);
        for (std::size_t f : ca) on_a[f] = 1;
        std::size_t ib = 0;
        while (!on_a[cb[ib]]) ++ib;
        std::size_t lca = cb[ib];
        std::size_t ia = 0;
        while (ca[ia] != lca) ++ia;

        std::vector<std::size_t> face_seq(ca.begin(), ca.begin() + ia + 1);
        for (std::size_t j = ib; j-- > 0;) face_seq.push_back(cb[j]);
        std::vector<EdgeId> cross_seq; // cross_seq[j] joins face j and j+1
        for (std::size_t j = 0; j < ia; ++j) cross_seq.push_back(parent_edge[ca[j]]);
        for (std::size_t j = ib; j-- > 0;) cross_seq.push_back(parent_edge[cb[j]]);

        HomologyGenerator gen;
        gen.crossed.assign(m.edge_count(), false);
        gen.crossed[e] = true;
        for (EdgeId c : cross_seq) {
            check(!gen.crossed[c], "dual tree path repeats an edge");
            gen.crossed[c] = true;
        }

        // Dart of edge `c` lying on face `f`.
        auto dart_on = [&](EdgeId c, std::size_t f) {
            Dart d = Map::edge_dart(c, 0);
            if (faces.face_of_dart[d] == f) return d;
            d = Map::edge_dart(c, 1);
            check(faces.face_of_dart[d] == f, "crossing edge misses face");
            return d;
        };

        // Walk the cycle of visits; in each face take the orbit darts
        // strictly between the entry and exit crossing points.
        std::size_t steps = face_seq.size();
        for (std::size_t j = 0; j < steps; ++j) {
            Dart in = j == 0 ? Map::edge_dart(e, 0)
                             : Map::alpha(dart_on(cross_seq[j - 1], face_seq[j - 1]));
            Dart out = j + 1 == steps ? Map::edge_dart(e, 1)
                                      : dart_on(cross_seq[j], face_seq[j]);
            check(faces.face_of_dart[in] == face_seq[j] &&
                      faces.face_of_dart[out] == face_seq[j],
                  "visit darts leave their face");
            for (Dart x = m.phi(in); x != out; x = m.phi(x))
                gen.gamma.push_back(x);
        }
        check(!gen.gamma.empty(), "generator walk is empty");
        for (std::size_t j = 0; j < gen.gamma.size(); ++j)
            check(m.head(gen.gamma[j]) ==
                      m.tail(gen.gamma[(j + 1) % gen.gamma.size()]),
                  "generator walk is not closed");
        basis.gens.push_back(std::move(gen));
    }

    // Crossing parities between transverse curves and walks.
    std::size_t n = basis.gens.size();
    basis.intersections.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unsigned cnt = 0;
            for (Dart d : basis.gens[j].gamma)
                cnt += basis.gens[i].crossed[Map::edge_of(d)];
            if (i == j) {
                check(cnt % 2 == 0, "self-crossing count is odd");
                continue;
            }
            basis.intersections[i][j] = cnt % 2;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            check(basis.intersections[i][j] == basis.intersections[j][i],
                  "crossing matrix not symmetric");

    if (n > 0) {
        auto inv = invert_mod2(basis.intersections);
        basis.dual_crossed.assign(n, std::vector<bool>(m.edge_count(), false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (inv[i][j])
                    for (EdgeId e = 0; e < m.edge_count(); ++e)
                        if (basis.gens[j].crossed[e])
                            basis.dual_crossed[i][e] = !basis.dual_crossed[i][e];
    }
    return basis;
}

} // namespace mdsurf
