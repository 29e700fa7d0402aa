#include <doctest.h>

#include <string>

#include "mdsurf/graph.hpp"
#include "mdsurf/preprocess.hpp"
#include "mdsurf/topology.hpp"

using namespace mdsurf;

namespace {

std::string fixture(const char* name) {
    return std::string(MDSURF_FIXTURE_DIR) + "/" + name;
}

// 2x2 grid on the torus: vertex (r,c) = 2r+c, four quad faces, genus 1.
const char* kTorusGrid = R"({
  "vertices": [
    {"id": 0, "weight": "1"},
    {"id": 1, "weight": "1"},
    {"id": 2, "weight": "1"},
    {"id": 3, "weight": "1"}
  ],
  "darts": {
    "0": [0, 8, 3, 13], "1": [2, 10, 1, 15],
    "2": [4, 12, 7, 9], "3": [6, 14, 5, 11]
  },
  "edges": [
    {"id": 0, "darts": [0, 1], "weight": "1"},
    {"id": 1, "darts": [2, 3], "weight": "1"},
    {"id": 2, "darts": [4, 5], "weight": "1"},
    {"id": 3, "darts": [6, 7], "weight": "1"},
    {"id": 4, "darts": [8, 9], "weight": "1"},
    {"id": 5, "darts": [10, 11], "weight": "1"},
    {"id": 6, "darts": [12, 13], "weight": "1"},
    {"id": 7, "darts": [14, 15], "weight": "1"}
  ],
  "boundary": []
})";

// Same map as in the preprocessing tests: six parallel edges on a torus
// with one alternating boundary walk.
const char* kAlternating = R"({
  "vertices": [
    {"id": 0, "weight": "u"},
    {"id": 1, "weight": "v"}
  ],
  "darts": {
    "0": [0, 10, 4, 2, 8, 6], "1": [1, 7, 5, 11, 9, 3]
  },
  "edges": [
    {"id": 0, "darts": [0, 1], "weight": "1"},
    {"id": 1, "darts": [2, 3], "weight": "1"},
    {"id": 2, "darts": [4, 5], "weight": "1"},
    {"id": 3, "darts": [6, 7], "weight": "1"},
    {"id": 4, "darts": [8, 9], "weight": "1"},
    {"id": 5, "darts": [10, 11], "weight": "1"}
  ],
  "boundary": [[0, 3, 4, 7, 8, 11]]
})";

} // namespace

TEST_CASE("closing the annulus classifies its four faces") {
    Graph g = Graph::load_file(fixture("annulus.json"));
    Faces f = close_surface(g);
    REQUIRE(f.orbits.size() == 4);
    CHECK(f.glued_circuit[f.face_of_dart[2]] == 0);
    CHECK(f.glued_circuit[f.face_of_dart[4]] == 1);
    int interior = 0;
    for (std::size_t i = 0; i < f.orbits.size(); ++i) interior += f.interior(i);
    CHECK(interior == 2);
    for (Dart d = 0; d < g.map.dart_count(); ++d)
        CHECK(f.face_of_dart[d] < f.orbits.size());

    CHECK(homology_basis(g).gens.empty());
}

TEST_CASE("torus grid has a rank-two basis with unit pairing") {
    Graph g = Graph::load(kTorusGrid);
    CHECK(g.genus() == 1);
    HomologyBasis basis = homology_basis(g);
    REQUIRE(basis.gens.size() == 2);

    CHECK(basis.intersections[0][0] == 0);
    CHECK(basis.intersections[1][1] == 0);
    CHECK(basis.intersections[0][1] == 1);
    CHECK(basis.intersections[1][0] == 1);

    // With this pairing the dual basis just swaps the two generators.
    CHECK(basis.dual_crossed[0] == basis.gens[1].crossed);
    CHECK(basis.dual_crossed[1] == basis.gens[0].crossed);

    for (const auto& gen : basis.gens) {
        CHECK(!gen.gamma.empty());
        int crossed = 0;
        for (EdgeId e = 0; e < g.map.edge_count(); ++e) crossed += gen.crossed[e];
        CHECK(crossed >= 1);
    }
}

TEST_CASE("one-holed torus: generators avoid the boundary") {
    Graph g = Graph::load(kAlternating);
    preprocess(g);
    CHECK(g.genus() == 1);
    CHECK(g.num_boundary() == 1);

    HomologyBasis basis = homology_basis(g);
    REQUIRE(basis.gens.size() == 2);

    auto circuit = g.circuit_edge_mask();
    auto walk_dart = g.boundary_dart_mask();
    for (const auto& gen : basis.gens) {
        for (EdgeId e = 0; e < g.map.edge_count(); ++e)
            if (gen.crossed[e]) CHECK(!circuit[e]);
        for (Dart d : gen.gamma) CHECK(!walk_dart[d]);
    }
    CHECK(basis.intersections[0][1] == 1);
}

TEST_CASE("planar graphs have empty bases") {
    for (const char* name : {"two_vertex_disk.json", "single_edge_disk.json"}) {
        Graph g = Graph::load_file(fixture(name));
        preprocess(g);
        CHECK(homology_basis(g).gens.empty());
    }
}
