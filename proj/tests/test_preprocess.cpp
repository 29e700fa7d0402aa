#include <doctest.h>

#include <string>

#include "mdsurf/graph.hpp"
#include "mdsurf/oracle.hpp"
#include "mdsurf/preprocess.hpp"

using namespace mdsurf;

namespace {

std::string fixture(const char* name) {
    return std::string(MDSURF_FIXTURE_DIR) + "/" + name;
}

// Two triangles sharing vertex 0; the outer walk visits 0 twice, so
// normalization has to pinch a corner off.
const char* kBouquet = R"({
  "vertices": [
    {"id": 0, "weight": "y0"},
    {"id": 1, "weight": "y1"},
    {"id": 2, "weight": "y2"},
    {"id": 3, "weight": "y3"},
    {"id": 4, "weight": "y4"}
  ],
  "darts": {
    "0": [5, 11, 6, 0], "1": [2, 1], "2": [4, 3], "3": [7, 8], "4": [9, 10]
  },
  "edges": [
    {"id": 0, "darts": [0, 1], "weight": "1"},
    {"id": 1, "darts": [2, 3], "weight": "1"},
    {"id": 2, "darts": [4, 5], "weight": "1"},
    {"id": 3, "darts": [6, 7], "weight": "1"},
    {"id": 4, "darts": [8, 9], "weight": "1"},
    {"id": 5, "darts": [10, 11], "weight": "1"}
  ],
  "boundary": [[6, 8, 10, 5, 3, 1]]
})";

// Two vertices joined by six parallel edges on a torus; the single boundary
// walk alternates between the two vertices and admits no corner cut.
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

// 4-cycle whose two faces are both boundary: every vertex lies on both
// circuits, which normalization must reject.
const char* kSharedAnnulus = R"({
  "vertices": [
    {"id": 0, "weight": "1"},
    {"id": 1, "weight": "1"},
    {"id": 2, "weight": "1"},
    {"id": 3, "weight": "1"}
  ],
  "darts": {"0": [0, 7], "1": [2, 1], "2": [4, 3], "3": [6, 5]},
  "edges": [
    {"id": 0, "darts": [0, 1], "weight": "1"},
    {"id": 1, "darts": [2, 3], "weight": "1"},
    {"id": 2, "darts": [4, 5], "weight": "1"},
    {"id": 3, "darts": [6, 7], "weight": "1"}
  ],
  "boundary": [[0, 2, 4, 6], [1, 7, 5, 3]]
})";

// Pentagon disk with symbolic vertex weights: the odd circuit exercises the
// edge-splitting pass.
const char* kPentagon = R"({
  "vertices": [
    {"id": 0, "weight": "p"},
    {"id": 1, "weight": "q"},
    {"id": 2, "weight": "r"},
    {"id": 3, "weight": "s"},
    {"id": 4, "weight": "t"}
  ],
  "darts": {"0": [0, 9], "1": [2, 1], "2": [4, 3], "3": [6, 5], "4": [8, 7]},
  "edges": [
    {"id": 0, "darts": [0, 1], "weight": "1"},
    {"id": 1, "darts": [2, 3], "weight": "1"},
    {"id": 2, "darts": [4, 5], "weight": "1"},
    {"id": 3, "darts": [6, 7], "weight": "1"},
    {"id": 4, "darts": [8, 9], "weight": "1"}
  ],
  "boundary": [[1, 9, 7, 5, 3]]
})";

bool walk_is_simple(const Graph& g, std::size_t k) {
    auto vs = g.walk_vertices(k);
    std::vector<VertexId> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace

TEST_CASE("single-edge bounce walk becomes a two-edge circuit") {
    Graph g = Graph::load_file(fixture("two_vertex_disk.json"));
    Poly before = oracle_Z_md<Poly>(g);

    normalize_boundary_circuits(g);
    CHECK(g.map.edge_count() == 2);
    CHECK(g.boundary[0].size() == 2);
    CHECK(walk_is_simple(g, 0));
    CHECK(g.edge_weights[1].is_numeric_zero());
    CHECK(oracle_Z_md<Poly>(g) == before);

    // Already even; the second pass must not touch anything.
    std::string snap = g.save();
    ensure_even_boundary(g);
    CHECK(g.save() == snap);
}

TEST_CASE("corner cut pinches off a repeated boundary visit") {
    Graph g = Graph::load(kBouquet);
    CHECK(g.genus() == 0);
    Poly before = oracle_Z_md<Poly>(g);
    auto sectors_before = oracle_Z_by_beta<Poly>(g);

    normalize_boundary_circuits(g);
    CHECK(g.map.edge_count() == 7);
    CHECK(g.boundary[0].size() == 5);
    CHECK(walk_is_simple(g, 0));
    // Every original vertex keeps its boundary status.
    auto circ = g.vertex_circuit();
    for (VertexId v = 0; v < 5; ++v) CHECK(circ[v] == 0);
    CHECK(oracle_Z_md<Poly>(g) == before);
    CHECK(oracle_Z_by_beta<Poly>(g) == sectors_before);
    CHECK(g.genus() == 0);
}

TEST_CASE("alternating walk is peeled down to a two-circuit") {
    Graph g = Graph::load(kAlternating);
    CHECK(g.genus() == 1);
    Poly before = oracle_Z_md<Poly>(g);
    Poly uv = Poly::variable(g.symbols.id("u")) *
              Poly::variable(g.symbols.id("v"));
    CHECK(before == uv + Poly(6));

    normalize_boundary_circuits(g);
    CHECK(g.map.edge_count() == 8);
    CHECK(g.boundary[0].size() == 2);
    CHECK(walk_is_simple(g, 0));
    CHECK(g.genus() == 1);
    CHECK(oracle_Z_md<Poly>(g) == before);
}

TEST_CASE("circuits sharing a vertex are rejected") {
    Graph g = Graph::load(kSharedAnnulus);
    CHECK(g.num_boundary() == 2);
    CHECK_THROWS_AS(normalize_boundary_circuits(g), input_error);
}

TEST_CASE("odd circuit gains a forced-monomer vertex") {
    Graph g = Graph::load(kPentagon);
    Poly before = oracle_Z_md<Poly>(g);
    auto sectors_before = oracle_Z_by_beta<Poly>(g);
    CHECK(sectors_before.size() == 1);
    CHECK(sectors_before.count(1) == 1);

    preprocess(g);
    CHECK(g.map.vertex_count() == 6);
    CHECK(g.map.edge_count() == 7);
    CHECK(g.boundary[0].size() == 6);
    CHECK(walk_is_simple(g, 0));
    // The inserted vertex carries weight 1 on weight-0 spokes.
    CHECK(g.vertex_weights[5].value == 1);
    CHECK(g.edge_weights[5].is_numeric_zero());
    CHECK(g.edge_weights[6].is_numeric_zero());

    CHECK(oracle_Z_md<Poly>(g) == before);
    // The forced monomer flips the circuit's monomer parity, relabeling the
    // sector but not its value.
    auto sectors_after = oracle_Z_by_beta<Poly>(g);
    CHECK(sectors_after.size() == 1);
    CHECK(sectors_after.at(0) == sectors_before.at(1));
}

TEST_CASE("preprocessing is idempotent") {
    for (const char* doc : {kBouquet, kAlternating, kPentagon}) {
        Graph g = Graph::load(doc);
        preprocess(g);
        std::string snap = g.save();
        preprocess(g);
        CHECK(g.save() == snap);
    }
    Graph a = Graph::load_file(fixture("annulus.json"));
    std::string snap = a.save();
    preprocess(a);
    CHECK(a.save() == snap);
}
