// Combinatorial maps: a graph embedding given by darts (edge-ends), the
// counterclockwise rotation sigma at each vertex, and the edge involution
// alpha. Darts are dense ids 0..2E-1 with alpha(d) = d ^ 1, so edge e owns
// darts 2e and 2e+1. Faces are the orbits of phi = sigma^{-1} . alpha; the
// phi-walk keeps its face on the left of each dart.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mdsurf/error.hpp"

namespace mdsurf {

using Dart = std::uint32_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

class Map {
public:
    // rotations[v] lists the darts based at v in counterclockwise order.
    // Dart ids must together be exactly {0..2E-1}.
    Map(std::size_t vertex_count, std::vector<std::vector<Dart>> rotations);

    std::size_t vertex_count() const { return vertex_dart_.size(); }
    std::size_t dart_count() const { return sigma_next_.size(); }
    std::size_t edge_count() const { return dart_count() / 2; }

    static Dart alpha(Dart d) { return d ^ 1u; }
    static EdgeId edge_of(Dart d) { return d >> 1; }
    static Dart edge_dart(EdgeId e, int end = 0) {
        return static_cast<Dart>(2 * e + end);
    }

    Dart sigma(Dart d) const { return sigma_next_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_prev_[d]; }
    Dart phi(Dart d) const { return sigma_prev_[alpha(d)]; }

    VertexId tail(Dart d) const { return vertex_of_[d]; }
    VertexId head(Dart d) const { return vertex_of_[alpha(d)]; }

    Dart dart_at(VertexId v) const { return vertex_dart_[v]; }
    std::vector<Dart> darts_at(VertexId v) const;
    std::size_t degree(VertexId v) const;

    std::pair<VertexId, VertexId> edge_ends(EdgeId e) const {
        Dart d = edge_dart(e);
        return {tail(d), head(d)};
    }

    // The phi-orbit starting at `start`.
    std::vector<Dart> face_walk(Dart start) const;
    // All phi-orbits, each starting at its smallest dart, sorted by it.
    std::vector<std::vector<Dart>> face_orbits() const;

    // --- surgery -----------------------------------------------------------
    // A face corner is named by the face-walk dart arriving at it: the corner
    // of face f at vertex head(d) between darts alpha(d) and sigma(alpha(d)).

    // Connects two corners of one face by a new edge, splitting the face.
    // Darts 2e (at head(arrive_p)) and 2e+1 (at head(arrive_q)); after the
    // cut, phi(arrive_p) = 2e and phi(arrive_q) = 2e+1.
    EdgeId add_chord(Dart arrive_p, Dart arrive_q);

    // Adds a new vertex inside a face, joined by spoke edges to the given
    // corners (listed in face-walk order). Spoke j gets dart 2e_j at the
    // corner vertex and 2e_j+1 at the new vertex.
    std::pair<VertexId, std::vector<EdgeId>> add_vertex_in_face(
        const std::vector<Dart>& arrive);

    // Structural invariants: rotations form a permutation consistent with
    // vertex membership, no loops, everything connected.
    void validate() const;

private:
    Dart new_dart(VertexId v);
    void insert_after(Dart x, Dart g); // g fresh, same vertex as x

    std::vector<Dart> sigma_next_, sigma_prev_;
    std::vector<VertexId> vertex_of_;
    std::vector<Dart> vertex_dart_; // one representative dart per vertex
};

} // namespace mdsurf
