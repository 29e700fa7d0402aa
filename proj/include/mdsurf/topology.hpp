// Closed-surface view of a bordered map and a homology basis for it.
//
// Gluing a disk into every hole makes each boundary walk an ordinary face.
// A tree-cotree decomposition of the glued surface then yields 2*genus
// leftover edges; each one defines a generator, represented two ways at
// once: the set of edges its transverse curve crosses, and a closed dart
// walk ("gamma") running alongside the curve through the crossed faces.
// Boundary disks are attached to the dual tree as leaves, so no generator
// ever crosses a boundary-circuit edge.
#pragma once

#include <vector>

#include "mdsurf/graph.hpp"

namespace mdsurf {

struct Faces {
    std::vector<std::vector<Dart>> orbits; // sorted by smallest dart
    std::vector<int> glued_circuit;        // circuit index or -1 (interior)
    std::vector<std::size_t> face_of_dart;

    bool interior(std::size_t f) const { return glued_circuit[f] < 0; }
};

Faces close_surface(const Graph& g);

struct HomologyGenerator {
    std::vector<bool> crossed; // per edge: the transverse curve crosses it
    std::vector<Dart> gamma;   // closed walk alongside the curve
};

struct HomologyBasis {
    std::vector<HomologyGenerator> gens; // 2*genus entries
    // Pairwise crossing parities: symmetric, zero diagonal, full rank.
    std::vector<std::vector<int>> intersections;
    // Row i: crossing-set of the curve dual to generator i under the
    // intersection pairing (flipping it changes exactly gamma_i's parity).
    std::vector<std::vector<bool>> dual_crossed;
};

HomologyBasis homology_basis(const Graph& g);

} // namespace mdsurf
