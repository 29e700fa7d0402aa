// Edge orientations and the admissibility conditions the Pfaffian method
// needs: every interior face odd, boundary circuits in the sector-specific
// descending pattern, and every homology generator walk odd. Orientations
// are adjusted only along transverse-curve crossing sets, which never touch
// circuit edges and change no face parity.
#pragma once

#include <vector>

#include "mdsurf/graph.hpp"
#include "mdsurf/topology.hpp"

namespace mdsurf {

struct Orientation {
    // bits[e] selects the tail side: 0 directs the edge out of its even
    // dart's vertex, 1 out of the odd dart's vertex.
    std::vector<char> bits;

    explicit Orientation(std::size_t edge_count) : bits(edge_count, 0) {}

    Dart tail_dart(EdgeId e) const {
        return Map::edge_dart(e, static_cast<unsigned>(bits[e]));
    }
    // True when the dart runs in the edge's direction.
    bool co_oriented(Dart d) const {
        return (d & 1u) == static_cast<unsigned>(bits[d >> 1]);
    }
    void flip(EdgeId e) { bits[e] ^= 1; }

    bool operator==(const Orientation& o) const { return bits == o.bits; }
};

// Number of walk darts running with the orientation.
unsigned n_count(const Orientation& l, const std::vector<Dart>& walk);

// Every interior face boundary has an odd co-oriented count.
bool is_kasteleyn(const Graph& g, const Faces& faces, const Orientation& l);

// Each boundary walk's co-oriented count has the parity its sector bit
// demands (even circuit length assumed).
bool disk_parities_match(const Graph& g, const Orientation& l, unsigned beta);

// Circuit edges carry exactly the label-descending pattern for this sector.
bool matches_boundary_pattern(const Graph& g, const Orientation& l,
                              unsigned beta);

// Pattern-orients the circuits for sector `beta`, then makes every interior
// face odd by flipping free edges up a spanning tree of faces. Requires the
// sector parity to match the vertex-count parity.
Orientation build_base_orientation(const Graph& g, const Faces& faces,
                                   unsigned beta);

// Flips dual-basis crossing sets until every generator walk is odd.
void fix_gamma_parities(const Graph& g, const HomologyBasis& basis,
                        Orientation& l);

// Flips the crossing set of every generator selected by `eps`.
void flip_epsilon(const HomologyBasis& basis, unsigned eps, Orientation& l);

} // namespace mdsurf
