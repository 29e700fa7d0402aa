// Sector bookkeeping for the Pfaffian engine: vertex labelling, admissible
// sector masks, and the quadratic twist sign.
#include "mdsurf/engine.hpp"

#include <bit>

namespace mdsurf {

Labelling make_labelling(const Graph& g, unsigned beta) {
    const Map& m = g.map;
    Labelling lab;
    lab.index_of_vertex.assign(m.vertex_count(), Labelling::npos);
    std::size_t next = 0;
    for (std::size_t k = 0; k < g.num_boundary(); ++k) {
        std::vector<std::size_t> block;
        for (Dart d : g.label_walk(k)) {
            VertexId v = m.tail(d);
            check(lab.index_of_vertex[v] == Labelling::npos,
                  "circuit walk repeats a vertex");
            lab.index_of_vertex[v] = next;
            lab.vertex_of_index.push_back(v);
            block.push_back(next++);
        }
        if ((beta >> k) & 1u) {
            lab.virtual_of_circuit.push_back(next);
            lab.vertex_of_index.push_back(Labelling::no_vertex);
            block.push_back(next++);
        } else {
            lab.virtual_of_circuit.push_back(Labelling::npos);
        }
        lab.blocks.push_back(std::move(block));
    }
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        if (lab.index_of_vertex[v] == Labelling::npos) {
            lab.index_of_vertex[v] = next;
            lab.vertex_of_index.push_back(static_cast<VertexId>(v));
            ++next;
        }
    lab.size = next;
    return lab;
}

std::vector<unsigned> admissible_sectors(const Graph& g) {
    std::size_t b = g.num_boundary();
    require(b <= 20, "too many boundary circuits");
    int vertex_parity = static_cast<int>(g.map.vertex_count() % 2);
    std::vector<unsigned> out;
    for (unsigned beta = 0; beta < (1u << b); ++beta)
        if (std::popcount(beta) % 2 == vertex_parity) out.push_back(beta);
    return out;
}

bool epsilon_sign_negative(const std::vector<std::vector<int>>& q, unsigned eps) {
    int parity = 0;
    std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!((eps >> i) & 1u)) continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if ((eps >> j) & 1u) parity ^= q[i][j] & 1;
    }
    return parity != 0;
}

} // namespace mdsurf
