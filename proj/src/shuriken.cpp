// Builds the per-sector ring-and-hub augmentation and its orientation rule.
#include "mdsurf/shuriken.hpp"

#include <algorithm>
#include <utility>

#include "mdsurf/error.hpp"

namespace mdsurf {

Shuriken build_shuriken(const Graph& g, unsigned beta) {
    std::size_t b = g.num_boundary();
    require(b <= 20, "too many boundary circuits");
    require(beta < (1u << b), "sector mask out of range");

    const Map& m = g.map;
    std::size_t v0 = m.vertex_count();
    std::size_t e0 = m.edge_count();

    std::vector<std::vector<Dart>> rot(v0);
    for (VertexId v = 0; v < v0; ++v) rot[v] = m.darts_at(v);

    std::vector<Weight> vw = g.vertex_weights;
    std::vector<Weight> ew = g.edge_weights;
    std::vector<char> bits;
    std::vector<std::size_t> index(v0, Labelling::npos);

    std::size_t next_index = 0;
    long multiplicity = 1;
    int clear_circuits = 0;
    std::size_t half_sum = 0;
    std::vector<char> on_circuit(v0, 0);
    EdgeId next_edge = static_cast<EdgeId>(e0);

    for (std::size_t k = 0; k < b; ++k) {
        bool set = (beta >> k) & 1u;
        std::vector<Dart> lw = g.label_walk(k);
        std::size_t n = lw.size();
        require(n >= 2 && n % 2 == 0, "boundary circuits must have even size");
        half_sum += n / 2;
        if (set)
            multiplicity *= static_cast<long>(n);
        else
            ++clear_circuits;

        std::vector<VertexId> w(n);
        for (std::size_t j = 0; j < n; ++j) {
            w[j] = m.tail(lw[j]);
            require(!on_circuit[w[j]],
                    "boundary circuits must be vertex-disjoint");
            on_circuit[w[j]] = 1;
        }

        // Edge ids, in blocks: blades at the lower-labelled endpoint, blades
        // at the higher-labelled endpoint, ring edges, hub spokes. Ring
        // vertex z_j sits between circuit labels j+1 and j+2.
        std::vector<EdgeId> pe(n), qe(n), re(n), ce(set ? n : 0);
        for (auto& e : pe) e = next_edge++;
        for (auto& e : qe) e = next_edge++;
        for (auto& e : re) e = next_edge++;
        for (auto& e : ce) e = next_edge++;

        for (std::size_t j = 0; j < n; ++j) vw.push_back(Weight::integer(1));
        if (set) vw.push_back(Weight::integer(1));

        // Weights and orientation bits in the same id order. Blades carry
        // their circuit endpoint's vertex weight and run out of even labels
        // into odd ones; a clear sector bit inverts the closing blade.
        for (std::size_t j = 0; j < n; ++j) {
            ew.push_back(g.vertex_weights[w[j]]); // dart 2e at w[j]
            bits.push_back((j + 1) % 2 == 0 ? 0 : 1);
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t up = (j + 1) % n; // dart 2e+1 at w[up]
            ew.push_back(g.vertex_weights[w[up]]);
            char dir = (up + 1) % 2 == 0 ? 1 : 0;
            if (!set && j + 1 == n) dir ^= 1;
            bits.push_back(dir);
        }
        // Ring edges run from the higher ring label to the lower; a set
        // sector bit inverts the closing edge instead.
        for (std::size_t j = 0; j < n; ++j) {
            ew.push_back(Weight::integer(1)); // dart 2e at z_j
            bits.push_back(j + 1 == n ? (set ? 1 : 0) : 1);
        }
        // Hub spokes leave the hub toward odd ring labels, enter from even.
        for (std::size_t j = 0; j < ce.size(); ++j) {
            ew.push_back(Weight::integer(1)); // dart 2e at the hub
            bits.push_back(j % 2 == 0 ? 0 : 1);
        }

        // Splice both blade darts into each circuit rotation directly before
        // the label-walk dart: that corner faces the old disk.
        for (std::size_t j = 0; j < n; ++j) {
            Dart a = lw[j];
            check(m.sigma_inv(a) == Map::alpha(lw[(j + n - 1) % n]),
                  "circuit walk must bound its glued disk");
            auto& list = rot[w[j]];
            auto it = std::find(list.begin(), list.end(), a);
            check(it != list.end(), "label-walk dart missing from rotation");
            it = list.insert(it, Map::edge_dart(pe[j], 0)); // to z_j
            list.insert(it, Map::edge_dart(qe[(j + n - 1) % n], 1)); // to z_{j-1}
        }

        // Ring vertex rotations, counterclockwise as seen inside the disk,
        // then the hub, which sees the ring in descending label order.
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Dart> zr;
            zr.push_back(Map::edge_dart(re[(j + n - 1) % n], 1)); // to z_{j-1}
            if (set) zr.push_back(Map::edge_dart(ce[j], 1));      // to hub
            zr.push_back(Map::edge_dart(re[j], 0));               // to z_{j+1}
            zr.push_back(Map::edge_dart(qe[j], 0));               // to w[j+1]
            zr.push_back(Map::edge_dart(pe[j], 1));               // to w[j]
            rot.push_back(std::move(zr));
        }
        if (set) {
            std::vector<Dart> hr;
            for (std::size_t j = n; j-- > 0;)
                hr.push_back(Map::edge_dart(ce[j], 0));
            rot.push_back(std::move(hr));
        }

        // Matrix rows: circuit labels, then ring labels, then the hub.
        for (std::size_t j = 0; j < n; ++j) index[w[j]] = next_index++;
        for (std::size_t j = 0; j < n; ++j) index.push_back(next_index++);
        if (set) index.push_back(next_index++);
    }

    for (std::size_t v = 0; v < v0; ++v)
        if (index[v] == Labelling::npos) index[v] = next_index++;

    multiplicity <<= clear_circuits;

    std::size_t total_vertices = rot.size();
    Graph out(Map(total_vertices, std::move(rot)), std::move(vw),
              std::move(ew), {}, g.symbols);
    out.validate();
    check(out.genus() == g.genus(), "augmentation must preserve the genus");

    return Shuriken{std::move(out),   beta,
                    e0,               std::move(bits),
                    std::move(index), multiplicity,
                    half_sum % 2 != 0};
}

Orientation extend_orientation(const Shuriken& s, const Orientation& base) {
    require(base.bits.size() == s.original_edges,
            "orientation does not match the original edge set");
    Orientation out(s.graph.map.edge_count());
    std::copy(base.bits.begin(), base.bits.end(), out.bits.begin());
    std::copy(s.new_edge_bits.begin(), s.new_edge_bits.end(),
              out.bits.begin() + static_cast<std::ptrdiff_t>(s.original_edges));
    Faces faces = close_surface(s.graph);
    check(is_kasteleyn(s.graph, faces, out),
          "extended orientation must make every face odd");
    return out;
}

} // namespace mdsurf
