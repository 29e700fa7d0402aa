#include "mdsurf/preprocess.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "mdsurf/error.hpp"

namespace mdsurf {

namespace {

std::vector<VertexId> walk_tails(const Map& m, const std::vector<Dart>& w) {
    std::vector<VertexId> vs(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) vs[i] = m.tail(w[i]);
    return vs;
}

bool is_proper_circuit(const Map& m, const std::vector<Dart>& w) {
    auto vs = walk_tails(m, w);
    auto sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    // Distinct vertices force distinct edges except for the length-2 walk
    // that bounces on a single edge.
    if (w.size() == 2 && Map::edge_of(w[0]) == Map::edge_of(w[1]))
        return false;
    return true;
}

// Walk vertices have period 2: x, y, x, y, ... (the one repeated-vertex
// shape that admits no corner cut).
bool is_two_vertex_alternating(const std::vector<VertexId>& vs) {
    if (vs.size() < 4 || vs.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] != vs[i % 2]) return false;
    return vs[0] != vs[1];
}

// One normalization step on walk k; boundary[k] is refreshed. Caller loops.
void normalize_step(Graph& g, std::size_t k) {
    const std::vector<Dart> w = g.boundary[k];
    const std::size_t L = w.size();
    const Map& m = g.map;

    if (L == 2 && Map::edge_of(w[0]) == Map::edge_of(w[1])) {
        // Walk bounces on one edge. Double the edge with a weight-0 twin;
        // the face splits into two bigons and we keep the one through w[0].
        g.add_chord(w[1], w[0], Weight::integer(0));
        g.boundary[k] = g.map.face_walk(w[0]);
        check(g.boundary[k].size() == 2, "bounce cut did not yield a bigon");
        return;
    }

    auto vs = walk_tails(m, w);
    std::map<VertexId, int> mult;
    for (VertexId v : vs) ++mult[v];

    // Corner cut: vertex at position t occurs more than once and its walk
    // neighbors differ, so a chord between them pinches that visit off into
    // an interior triangle.
    for (std::size_t t = 0; t < L; ++t) {
        if (mult[vs[t]] < 2) continue;
        VertexId before = vs[(t + L - 1) % L];
        VertexId after = vs[(t + 1) % L];
        if (before == after) continue;
        Dart arrive_p = w[(t + L - 2) % L]; // arrives at `before`
        Dart arrive_q = w[t];               // arrives at `after`
        EdgeId e = g.add_chord(arrive_p, arrive_q, Weight::integer(0));
        g.boundary[k] = g.map.face_walk(Map::edge_dart(e, 0));
        check(g.boundary[k].size() == L - 1, "corner cut changed walk badly");
        return;
    }

    // No corner cut exists only for the two-vertex alternating walk; peel
    // one x-y-x arc off into an interior face, shortening the walk by 2.
    if (is_two_vertex_alternating(vs)) {
        Dart arrive_p = w[L - 1]; // arrives at vs[0]
        Dart arrive_q = w[2];     // arrives at vs[3]
        EdgeId e = g.add_chord(arrive_p, arrive_q, Weight::integer(0));
        g.boundary[k] = g.map.face_walk(Map::edge_dart(e, 0));
        check(g.boundary[k].size() == L - 2, "arc cut changed walk badly");
        return;
    }

    check(false, "boundary walk admits no normalization step");
}

} // namespace

void normalize_boundary_circuits(Graph& g) {
    for (std::size_t k = 0; k < g.boundary.size(); ++k)
        while (!is_proper_circuit(g.map, g.boundary[k])) normalize_step(g, k);

    std::vector<int> owner(g.map.vertex_count(), -1);
    for (std::size_t k = 0; k < g.boundary.size(); ++k)
        for (VertexId v : g.walk_vertices(k)) {
            require(owner[v] < 0,
                    "boundary circuits are not vertex-disjoint");
            owner[v] = static_cast<int>(k);
        }
    g.validate();
}

void ensure_even_boundary(Graph& g) {
    for (std::size_t k = 0; k < g.boundary.size(); ++k) {
        const std::vector<Dart> w = g.boundary[k];
        if (w.size() % 2 == 0) continue;
        check(is_proper_circuit(g.map, w),
              "even-length pass requires normalized circuits");

        // Split the walk edge leaving the lowest vertex of the circuit.
        std::size_t t = 0;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (g.map.tail(w[i]) < g.map.tail(w[t])) t = i;
        Dart d_out = w[t];
        Dart d_in = w[(t + w.size() - 1) % w.size()];

        g.add_vertex_in_face({d_in, d_out}, Weight::integer(1),
                             {Weight::integer(0), Weight::integer(0)});
        g.boundary[k] = g.map.face_walk(d_in);
        check(g.boundary[k].size() == w.size() + 1,
              "edge split changed walk badly");
    }
    g.validate();
}

void preprocess(Graph& g) {
    normalize_boundary_circuits(g);
    ensure_even_boundary(g);
    ensure_even_vertex_count(g);
}

} // namespace mdsurf
