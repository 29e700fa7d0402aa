// Weighted surface graphs: a combinatorial map plus exact vertex/edge
// weights and the list of boundary walks. Serialization to and from the JSON
// document format described in the README.
#pragma once

#include <string>
#include <vector>

#include "mdsurf/map.hpp"
#include "mdsurf/symbols.hpp"
#include "mdsurf/weight.hpp"

namespace mdsurf {

struct Graph {
    Map map;
    std::vector<Weight> vertex_weights; // indexed by VertexId
    std::vector<Weight> edge_weights;   // indexed by EdgeId
    // One dart walk per boundary component, each a phi-orbit of the map.
    // After preprocessing these are circuits (each vertex visited once).
    std::vector<std::vector<Dart>> boundary;
    SymbolTable symbols;

    // External ids from the source document, kept for round-tripping.
    std::vector<long long> vertex_ext, edge_ext, dart_ext;

    Graph(Map m, std::vector<Weight> vw, std::vector<Weight> ew,
          std::vector<std::vector<Dart>> bd, SymbolTable syms);

    static Graph load(const std::string& json_text);
    static Graph load_file(const std::string& path);
    std::string save() const;

    std::size_t num_boundary() const { return boundary.size(); }
    unsigned genus() const;

    // Boundary classification helpers (computed fresh; graphs are small).
    std::vector<int> vertex_circuit() const;      // circuit index or -1
    std::vector<bool> circuit_edge_mask() const;  // edge lies on some walk
    std::vector<bool> boundary_dart_mask() const; // dart is in some walk
    // Vertices met along walk k, in walk order (tail of each dart).
    std::vector<VertexId> walk_vertices(std::size_t k) const;
    // Circuit k traversed against its stored walk, starting at its lowest
    // vertex: the order in which circuit vertices receive matrix labels.
    std::vector<Dart> label_walk(std::size_t k) const;

    // Surgery wrappers keeping weights and external ids in sync with the
    // map. Callers that split or reroute a boundary face must refresh
    // `boundary` themselves.
    EdgeId add_chord(Dart arrive_p, Dart arrive_q, const Weight& w);
    std::pair<VertexId, std::vector<EdgeId>> add_vertex_in_face(
        const std::vector<Dart>& arrive, const Weight& vertex_w,
        const std::vector<Weight>& spoke_w);

    // Boundary walks are phi-orbits, pairwise distinct; sizes consistent.
    void validate() const;

private:
    long long next_vertex_ext_ = 0, next_edge_ext_ = 0, next_dart_ext_ = 0;
};

} // namespace mdsurf
