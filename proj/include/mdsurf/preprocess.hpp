// Rewrites an input graph so every boundary walk is a simple circuit of even
// length, without changing the monomer-dimer partition function. All
// surgeries add only weight-0 edges (invisible to dimer coverings) and
// weight-1 monomer vertices (forced monomers), so Z is preserved exactly.
#pragma once

#include "mdsurf/graph.hpp"

namespace mdsurf {

// Cuts self-touching boundary walks apart with weight-0 chords until each
// walk visits every vertex at most once. Throws input_error if the resulting
// circuits are not pairwise vertex-disjoint.
void normalize_boundary_circuits(Graph& g);

// For each odd-length circuit, splits one boundary edge with a new weight-1
// vertex attached by weight-0 edges, making the circuit one dart longer.
// Requires normalized circuits.
void ensure_even_boundary(Graph& g);

// Vertex-count parity needs no graph rewriting here: the evaluation stage
// restricts its boundary-sector sum to sectors matching the parity of the
// vertex count, which is equivalent and avoids touching the map.
inline void ensure_even_vertex_count(Graph&) {}

// Full pipeline: normalize circuits, then even out their lengths.
void preprocess(Graph& g);

} // namespace mdsurf
