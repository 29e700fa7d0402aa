#include "mdsurf/map.hpp"

#include <algorithm>

namespace mdsurf {

Map::Map(std::size_t vertex_count, std::vector<std::vector<Dart>> rotations) {
    require(rotations.size() == vertex_count,
            "rotation list count does not match vertex count");
    std::size_t nd = 0;
    for (auto& rot : rotations) nd += rot.size();
    require(nd >= 2 && nd % 2 == 0, "dart count must be even and nonzero");

    sigma_next_.assign(nd, 0);
    sigma_prev_.assign(nd, 0);
    vertex_of_.assign(nd, 0);
    vertex_dart_.assign(vertex_count, 0);

    std::vector<bool> seen(nd, false);
    for (VertexId v = 0; v < vertex_count; ++v) {
        auto& rot = rotations[v];
        require(!rot.empty(), "vertex with no darts (isolated vertex)");
        for (std::size_t i = 0; i < rot.size(); ++i) {
            Dart d = rot[i];
            require(d < nd, "dart id out of range");
            require(!seen[d], "dart listed twice");
            seen[d] = true;
            vertex_of_[d] = v;
            sigma_next_[d] = rot[(i + 1) % rot.size()];
            sigma_prev_[d] = rot[(i + rot.size() - 1) % rot.size()];
        }
        vertex_dart_[v] = rot[0];
    }
    validate();
}

std::vector<Dart> Map::darts_at(VertexId v) const {
    std::vector<Dart> out;
    Dart start = vertex_dart_[v];
    Dart d = start;
    do {
        out.push_back(d);
        d = sigma_next_[d];
    } while (d != start);
    return out;
}

std::size_t Map::degree(VertexId v) const { return darts_at(v).size(); }

std::vector<Dart> Map::face_walk(Dart start) const {
    std::vector<Dart> out;
    Dart d = start;
    do {
        out.push_back(d);
        d = phi(d);
    } while (d != start);
    return out;
}

std::vector<std::vector<Dart>> Map::face_orbits() const {
    std::vector<std::vector<Dart>> out;
    std::vector<bool> visited(dart_count(), false);
    for (Dart d = 0; d < dart_count(); ++d) {
        if (visited[d]) continue;
        out.push_back(face_walk(d));
        for (Dart w : out.back()) visited[w] = true;
    }
    return out;
}

Dart Map::new_dart(VertexId v) {
    Dart d = static_cast<Dart>(dart_count());
    sigma_next_.push_back(d);
    sigma_prev_.push_back(d);
    vertex_of_.push_back(v);
    return d;
}

void Map::insert_after(Dart x, Dart g) {
    Dart after = sigma_next_[x];
    sigma_next_[x] = g;
    sigma_prev_[g] = x;
    sigma_next_[g] = after;
    sigma_prev_[after] = g;
}

EdgeId Map::add_chord(Dart arrive_p, Dart arrive_q) {
    check(arrive_p != arrive_q, "chord endpoints name the same corner");
    check(head(arrive_p) != head(arrive_q), "chord would create a loop");
    auto walk = face_walk(arrive_p);
    check(std::find(walk.begin(), walk.end(), arrive_q) != walk.end(),
          "chord corners lie on different faces");

    Dart anchor_p = phi(arrive_p);
    Dart anchor_q = phi(arrive_q);
    EdgeId e = static_cast<EdgeId>(edge_count());
    Dart g = new_dart(head(arrive_p));  // = 2e
    Dart gq = new_dart(head(arrive_q)); // = 2e+1
    insert_after(anchor_p, g);
    insert_after(anchor_q, gq);
    return e;
}

std::pair<VertexId, std::vector<EdgeId>> Map::add_vertex_in_face(
    const std::vector<Dart>& arrive) {
    check(!arrive.empty(), "add_vertex_in_face needs at least one corner");
    // All corners must be on one face, listed in face-walk order.
    auto walk = face_walk(arrive[0]);
    std::size_t pos = 0;
    for (std::size_t j = 1; j < arrive.size(); ++j) {
        std::size_t next = pos + 1;
        while (next < walk.size() && walk[next] != arrive[j]) ++next;
        check(next < walk.size(),
              "corner darts not in face-walk order on a single face");
        pos = next;
    }

    std::vector<Dart> anchors;
    anchors.reserve(arrive.size());
    for (Dart d : arrive) anchors.push_back(phi(d));

    VertexId z = static_cast<VertexId>(vertex_count());
    std::vector<EdgeId> spokes;
    std::vector<Dart> at_z;
    for (std::size_t j = 0; j < arrive.size(); ++j) {
        EdgeId e = static_cast<EdgeId>(edge_count());
        Dart s = new_dart(head(arrive[j])); // = 2e
        Dart sz = new_dart(z);              // = 2e+1
        insert_after(anchors[j], s);
        spokes.push_back(e);
        at_z.push_back(sz);
    }
    vertex_dart_.push_back(at_z[0]);
    for (std::size_t j = 0; j < at_z.size(); ++j) {
        Dart cur = at_z[j];
        Dart nxt = at_z[(j + 1) % at_z.size()];
        sigma_next_[cur] = nxt;
        sigma_prev_[nxt] = cur;
    }
    return {z, spokes};
}

void Map::validate() const {
    std::size_t nd = dart_count();
    check(nd >= 2 && nd % 2 == 0, "invalid dart count");

    // sigma_next / sigma_prev are mutually inverse permutations.
    std::vector<bool> hit(nd, false);
    for (Dart d = 0; d < nd; ++d) {
        Dart n = sigma_next_[d];
        check(n < nd, "sigma out of range");
        check(!hit[n], "sigma is not a permutation");
        hit[n] = true;
        check(sigma_prev_[n] == d, "sigma_prev inconsistent with sigma_next");
        check(vertex_of_[n] == vertex_of_[d], "sigma orbit spans two vertices");
    }

    // Each vertex's representative reaches exactly its darts; counts add up.
    std::size_t total = 0;
    std::vector<bool> seen(nd, false);
    for (VertexId v = 0; v < vertex_count(); ++v) {
        for (Dart d : darts_at(v)) {
            check(vertex_of_[d] == v, "vertex representative orbit mismatch");
            check(!seen[d], "dart reached from two vertices");
            seen[d] = true;
            ++total;
        }
    }
    check(total == nd, "rotation orbits do not cover all darts");

    for (Dart d = 0; d < nd; ++d)
        require(vertex_of_[d] != vertex_of_[alpha(d)], "loop edge not allowed");

    // Connectivity over darts under sigma and alpha.
    std::vector<bool> reached(nd, false);
    std::vector<Dart> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (Dart n : {sigma_next_[d], alpha(d)}) {
            if (!reached[n]) {
                reached[n] = true;
                stack.push_back(n);
            }
        }
    }
    for (Dart d = 0; d < nd; ++d)
        require(reached[d], "graph is not connected");
}

} // namespace mdsurf
