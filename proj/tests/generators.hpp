// Instance families for property tests: deterministic cylinder lattices and
// seeded random disks, annuli, three-holed spheres, and one-holed tori. All
// randomness flows through the shared deterministic Rng, so any failure
// reproduces from its seed.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "mdsurf/graph.hpp"
#include "mdsurf/weight.hpp"
#include "test_util.hpp"

namespace mdsurf::testgen {

using testutil::rand_range;
using testutil::Rng;

// --- deterministic lattices -------------------------------------------

// w x h grid wrapped into a tube: rows are rings, and the first and last
// ring faces are the two holes. Unit weights everywhere.
inline Graph cylinder(std::size_t w, std::size_t h) {
    // Ring edge (r,c) joins (r,c)-(r,c+1) with id r*w+c; rung edge (r,c)
    // joins (r,c)-(r+1,c) with id w*h + r*w + c. Dart 2e sits at (r,c).
    auto ring = [&](std::size_t r, std::size_t c) {
        return static_cast<EdgeId>(r * w + c % w);
    };
    auto rung = [&](std::size_t r, std::size_t c) {
        return static_cast<EdgeId>(w * h + r * w + c);
    };
    std::vector<std::vector<Dart>> rot(w * h);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) {
            auto& list = rot[r * w + c];
            list.push_back(Map::edge_dart(ring(r, c), 0));
            if (r + 1 < h) list.push_back(Map::edge_dart(rung(r, c), 0));
            list.push_back(Map::edge_dart(ring(r, c + w - 1), 1));
            if (r > 0) list.push_back(Map::edge_dart(rung(r - 1, c), 1));
        }
    std::size_t vertices = rot.size();
    std::size_t edges = w * h + w * (h - 1);
    Map m(vertices, std::move(rot));

    // The two holes are the faces built purely from one row's ring edges.
    std::vector<std::vector<Dart>> boundary;
    for (std::size_t row : {std::size_t{0}, h - 1}) {
        for (const auto& orbit : m.face_orbits()) {
            bool pure = true;
            for (Dart d : orbit) {
                EdgeId e = Map::edge_of(d);
                if (e >= w * h || e / w != row) pure = false;
            }
            if (pure) {
                boundary.push_back(orbit);
                break;
            }
        }
    }
    std::vector<Weight> vw(vertices, Weight::integer(1));
    std::vector<Weight> ew(edges, Weight::integer(1));
    Graph g(std::move(m), std::move(vw), std::move(ew), std::move(boundary),
            SymbolTable{});
    g.validate();
    return g;
}

// w x h grid on the torus: every face is a quad. Unit weights.
inline Graph torus_grid(std::size_t w, std::size_t h) {
    auto east = [&](std::size_t r, std::size_t c) {
        return static_cast<EdgeId>(r * w + c % w);
    };
    auto south = [&](std::size_t r, std::size_t c) {
        return static_cast<EdgeId>(w * h + (r % h) * w + c);
    };
    std::vector<std::vector<Dart>> rot(w * h);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c)
            rot[r * w + c] = {Map::edge_dart(east(r, c), 0),
                              Map::edge_dart(south(r, c), 0),
                              Map::edge_dart(east(r, c + w - 1), 1),
                              Map::edge_dart(south(r + h - 1, c), 1)};
    std::size_t vertices = rot.size();
    Map m(vertices, std::move(rot));
    std::vector<Weight> vw(vertices, Weight::integer(1));
    std::vector<Weight> ew(2 * w * h, Weight::integer(1));
    Graph g(std::move(m), std::move(vw), std::move(ew), {}, SymbolTable{});
    g.validate();
    return g;
}

// Sphere with three pairwise vertex-disjoint holes: an outer na-cycle and
// two inner cycles of sizes nb and nc, chained by three connector edges.
inline Graph pants(std::size_t na, std::size_t nb, std::size_t nc) {
    std::size_t vertices = na + nb + nc;
    VertexId a0 = 0, b0 = static_cast<VertexId>(na),
             c0 = static_cast<VertexId>(na + nb);
    // Cycle edge i of each block joins its vertices i and i+1 (mod size),
    // dart 2e at vertex i; three connectors follow.
    auto ae = [&](std::size_t i) { return static_cast<EdgeId>(i % na); };
    auto be = [&](std::size_t i) {
        return static_cast<EdgeId>(na + i % nb);
    };
    auto ce = [&](std::size_t i) {
        return static_cast<EdgeId>(na + nb + i % nc);
    };
    EdgeId ea = static_cast<EdgeId>(vertices);     // a0 - b0
    EdgeId eb = static_cast<EdgeId>(vertices + 1); // b_{nb/2} - c0
    EdgeId ec = static_cast<EdgeId>(vertices + 2); // c_{nc/2} - a_{na/2}

    std::vector<std::vector<Dart>> rot(vertices);
    for (std::size_t i = 0; i < na; ++i) {
        auto& list = rot[a0 + i];
        list.push_back(Map::edge_dart(ae(i), 0)); // toward the next
        if (i == 0) list.push_back(Map::edge_dart(ea, 0));
        if (i == na / 2) list.push_back(Map::edge_dart(ec, 1));
        list.push_back(Map::edge_dart(ae(i + na - 1), 1)); // toward the previous
    }
    for (std::size_t i = 0; i < nb; ++i) {
        auto& list = rot[b0 + i];
        if (i == 0) list.push_back(Map::edge_dart(ea, 1));
        if (i == nb / 2) list.push_back(Map::edge_dart(eb, 0));
        list.push_back(Map::edge_dart(be(i + nb - 1), 1));
        list.push_back(Map::edge_dart(be(i), 0));
    }
    for (std::size_t i = 0; i < nc; ++i) {
        auto& list = rot[c0 + i];
        if (i == 0) list.push_back(Map::edge_dart(eb, 1));
        if (i == nc / 2) list.push_back(Map::edge_dart(ec, 0));
        list.push_back(Map::edge_dart(ce(i + nc - 1), 1));
        list.push_back(Map::edge_dart(ce(i), 0));
    }
    Map m(vertices, std::move(rot));

    // Each hole is the face built purely from one block's cycle edges.
    std::vector<std::vector<Dart>> boundary;
    std::array<std::pair<EdgeId, EdgeId>, 3> blocks = {
        {{0, static_cast<EdgeId>(na)},
         {static_cast<EdgeId>(na), static_cast<EdgeId>(na + nb)},
         {static_cast<EdgeId>(na + nb), static_cast<EdgeId>(na + nb + nc)}}};
    for (auto [lo, hi] : blocks) {
        for (const auto& orbit : m.face_orbits()) {
            bool pure = true;
            for (Dart d : orbit) {
                EdgeId e = Map::edge_of(d);
                if (e < lo || e >= hi) pure = false;
            }
            if (pure) {
                boundary.push_back(orbit);
                break;
            }
        }
    }
    std::vector<Weight> vw(vertices, Weight::integer(1));
    std::vector<Weight> ew(vertices + 3, Weight::integer(1));
    Graph g(std::move(m), std::move(vw), std::move(ew), std::move(boundary),
            SymbolTable{});
    g.validate();
    return g;
}

// --- seeded random families -------------------------------------------

// Subdivides random interior faces with chords and new spoke vertices,
// leaving every boundary walk untouched. Caps the vertex count at max_v.
inline void grow(Graph& g, Rng& rng, std::size_t max_v) {
    long ops = rand_range(rng, 2, 8);
    for (long step = 0; step < ops; ++step) {
        auto orbits = g.map.face_orbits();
        std::vector<char> hole(g.map.dart_count(), 0);
        for (const auto& walk : g.boundary)
            for (Dart d : walk) hole[d] = 1;
        std::vector<std::size_t> interior;
        for (std::size_t i = 0; i < orbits.size(); ++i)
            if (!hole[orbits[i][0]]) interior.push_back(i);
        if (interior.empty()) break;
        const auto& face =
            orbits[interior[static_cast<std::size_t>(rand_range(
                rng, 0, static_cast<long>(interior.size()) - 1))]];

        bool add_vertex =
            g.map.vertex_count() < max_v && rand_range(rng, 0, 1) == 1;
        if (add_vertex) {
            long want = rand_range(rng, 2, 3);
            std::size_t spokes =
                std::min<std::size_t>(face.size(), static_cast<std::size_t>(want));
            // Distinct corner positions in face-walk order.
            std::vector<std::size_t> pos;
            while (pos.size() < spokes) {
                auto p = static_cast<std::size_t>(
                    rand_range(rng, 0, static_cast<long>(face.size()) - 1));
                bool dup = false;
                for (std::size_t q : pos) dup = dup || q == p;
                if (!dup) pos.push_back(p);
            }
            std::sort(pos.begin(), pos.end());
            std::vector<Dart> arrive;
            for (std::size_t p : pos) arrive.push_back(face[p]);
            std::vector<Weight> spoke_w(spokes, Weight::integer(1));
            g.add_vertex_in_face(arrive, Weight::integer(1), spoke_w);
        } else {
            if (face.size() < 2) continue;
            auto i = static_cast<std::size_t>(
                rand_range(rng, 0, static_cast<long>(face.size()) - 1));
            auto j = static_cast<std::size_t>(
                rand_range(rng, 0, static_cast<long>(face.size()) - 1));
            if (i == j || g.map.head(face[i]) == g.map.head(face[j])) continue;
            g.add_chord(face[i], face[j], Weight::integer(1));
        }
    }
}

// Small random integer weights: monomer weights 0..3 on circuit vertices
// (interior vertices never carry monomers), edge weights 1..3.
inline void randomize_weights(Graph& g, Rng& rng) {
    auto circ = g.vertex_circuit();
    for (std::size_t v = 0; v < g.map.vertex_count(); ++v)
        g.vertex_weights[v] =
            Weight::integer(circ[v] >= 0 ? rand_range(rng, 0, 3) : 1);
    for (std::size_t e = 0; e < g.map.edge_count(); ++e)
        g.edge_weights[e] = Weight::integer(rand_range(rng, 1, 3));
}

inline Graph random_disk(Rng& rng, std::size_t max_v = 12) {
    auto n = static_cast<std::size_t>(rand_range(rng, 3, 6));
    std::vector<std::vector<Dart>> rot(n);
    for (std::size_t i = 0; i < n; ++i)
        rot[i] = {Map::edge_dart(static_cast<EdgeId>(i), 0),
                  Map::edge_dart(static_cast<EdgeId>((i + n - 1) % n), 1)};
    Map m(n, std::move(rot));
    std::vector<std::vector<Dart>> boundary = {m.face_walk(1)};
    std::vector<Weight> vw(n, Weight::integer(1));
    std::vector<Weight> ew(n, Weight::integer(1));
    Graph g(std::move(m), std::move(vw), std::move(ew), std::move(boundary),
            SymbolTable{});
    grow(g, rng, max_v);
    randomize_weights(g, rng);
    g.validate();
    return g;
}

inline Graph random_annulus(Rng& rng, std::size_t max_v = 12) {
    auto w = static_cast<std::size_t>(rand_range(rng, 3, 5));
    Graph g = cylinder(w, 2);
    grow(g, rng, max_v);
    randomize_weights(g, rng);
    g.validate();
    return g;
}

inline Graph random_pants(Rng& rng, std::size_t max_v = 12) {
    auto na = static_cast<std::size_t>(rand_range(rng, 3, 5));
    auto nb = static_cast<std::size_t>(rand_range(rng, 2, 3));
    auto nc = static_cast<std::size_t>(rand_range(rng, 2, 3));
    Graph g = pants(na, nb, nc);
    grow(g, rng, max_v);
    randomize_weights(g, rng);
    g.validate();
    return g;
}

inline Graph random_torus_hole(Rng& rng, std::size_t max_v = 12) {
    auto w = static_cast<std::size_t>(rand_range(rng, 2, 3));
    auto h = static_cast<std::size_t>(rand_range(rng, 2, 3));
    Graph g = torus_grid(w, h);
    // Open the first face whose corners are four distinct vertices.
    for (const auto& orbit : g.map.face_orbits()) {
        std::vector<char> seen(g.map.vertex_count(), 0);
        bool simple = true;
        for (Dart d : orbit) {
            if (seen[g.map.tail(d)]) simple = false;
            seen[g.map.tail(d)] = 1;
        }
        if (simple) {
            g.boundary.push_back(orbit);
            break;
        }
    }
    grow(g, rng, max_v);
    randomize_weights(g, rng);
    g.validate();
    return g;
}

} // namespace mdsurf::testgen
