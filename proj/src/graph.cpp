#include "mdsurf/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mdsurf {

using nlohmann::json;

Graph::Graph(Map m, std::vector<Weight> vw, std::vector<Weight> ew,
             std::vector<std::vector<Dart>> bd, SymbolTable syms)
    : map(std::move(m)),
      vertex_weights(std::move(vw)),
      edge_weights(std::move(ew)),
      boundary(std::move(bd)),
      symbols(std::move(syms)) {
    require(vertex_weights.size() == map.vertex_count(),
            "vertex weight count mismatch");
    require(edge_weights.size() == map.edge_count(), "edge weight count mismatch");
    vertex_ext.resize(map.vertex_count());
    edge_ext.resize(map.edge_count());
    dart_ext.resize(map.dart_count());
    for (std::size_t i = 0; i < vertex_ext.size(); ++i) vertex_ext[i] = (long long)i;
    for (std::size_t i = 0; i < edge_ext.size(); ++i) edge_ext[i] = (long long)i;
    for (std::size_t i = 0; i < dart_ext.size(); ++i) dart_ext[i] = (long long)i;
    next_vertex_ext_ = (long long)vertex_ext.size();
    next_edge_ext_ = (long long)edge_ext.size();
    next_dart_ext_ = (long long)dart_ext.size();
    validate();
}

void Graph::validate() const {
    check(vertex_weights.size() == map.vertex_count(), "vertex weights out of sync");
    check(edge_weights.size() == map.edge_count(), "edge weights out of sync");

    std::set<Dart> starts;
    for (auto& walk : boundary) {
        require(!walk.empty(), "empty boundary walk");
        auto orbit = map.face_walk(walk[0]);
        require(orbit.size() == walk.size() &&
                    std::equal(orbit.begin(), orbit.end(), walk.begin()),
                "boundary walk is not a face of the map (walk must follow the "
                "face orbit of its first dart)");
        Dart least = *std::min_element(walk.begin(), walk.end());
        require(starts.insert(least).second,
                "two boundary walks name the same face");
    }
    genus(); // throws if the Euler characteristic is inconsistent
}

unsigned Graph::genus() const {
    long long v = (long long)map.vertex_count();
    long long e = (long long)map.edge_count();
    long long f = (long long)map.face_orbits().size();
    long long chi = v - e + f; // Euler characteristic with every face a disk
    require((2 - chi) % 2 == 0 && chi <= 2, "invalid Euler characteristic");
    return (unsigned)((2 - chi) / 2);
}

std::vector<int> Graph::vertex_circuit() const {
    std::vector<int> out(map.vertex_count(), -1);
    for (std::size_t k = 0; k < boundary.size(); ++k)
        for (Dart d : boundary[k]) out[map.tail(d)] = (int)k;
    return out;
}

std::vector<bool> Graph::circuit_edge_mask() const {
    std::vector<bool> out(map.edge_count(), false);
    for (auto& walk : boundary)
        for (Dart d : walk) out[Map::edge_of(d)] = true;
    return out;
}

std::vector<bool> Graph::boundary_dart_mask() const {
    std::vector<bool> out(map.dart_count(), false);
    for (auto& walk : boundary)
        for (Dart d : walk) out[d] = true;
    return out;
}

std::vector<VertexId> Graph::walk_vertices(std::size_t k) const {
    std::vector<VertexId> out;
    for (Dart d : boundary[k]) out.push_back(map.tail(d));
    return out;
}

std::vector<Dart> Graph::label_walk(std::size_t k) const {
    const auto& walk = boundary[k];
    std::vector<Dart> out(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i)
        out[i] = Map::alpha(walk[walk.size() - 1 - i]);
    std::size_t at = 0;
    for (std::size_t i = 1; i < out.size(); ++i)
        if (map.tail(out[i]) < map.tail(out[at])) at = i;
    std::rotate(out.begin(), out.begin() + at, out.end());
    return out;
}

EdgeId Graph::add_chord(Dart arrive_p, Dart arrive_q, const Weight& w) {
    EdgeId e = map.add_chord(arrive_p, arrive_q);
    edge_weights.push_back(w);
    edge_ext.push_back(next_edge_ext_++);
    dart_ext.push_back(next_dart_ext_++);
    dart_ext.push_back(next_dart_ext_++);
    return e;
}

std::pair<VertexId, std::vector<EdgeId>> Graph::add_vertex_in_face(
    const std::vector<Dart>& arrive, const Weight& vertex_w,
    const std::vector<Weight>& spoke_w) {
    require(spoke_w.size() == arrive.size(), "one spoke weight per corner");
    auto [z, spokes] = map.add_vertex_in_face(arrive);
    vertex_weights.push_back(vertex_w);
    vertex_ext.push_back(next_vertex_ext_++);
    for (std::size_t j = 0; j < spokes.size(); ++j) {
        edge_weights.push_back(spoke_w[j]);
        edge_ext.push_back(next_edge_ext_++);
        dart_ext.push_back(next_dart_ext_++);
        dart_ext.push_back(next_dart_ext_++);
    }
    return {z, spokes};
}

namespace {

const json& get_field(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(std::string("missing field '") + key + "' in " + where);
    return *it;
}

long long get_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

std::string get_weight_string(const json& j, const char* what) {
    if (!j.is_string())
        throw input_error(std::string(what) +
                          " must be a string (integer, p/q, or symbol name)");
    return j.get<std::string>();
}

} // namespace

Graph Graph::load(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("document must be a JSON object");

    const json& jverts = get_field(doc, "vertices", "document");
    const json& jdarts = get_field(doc, "darts", "document");
    const json& jedges = get_field(doc, "edges", "document");
    const json& jboundary = get_field(doc, "boundary", "document");
    if (!jverts.is_array() || jverts.empty())
        throw input_error("'vertices' must be a nonempty array");
    if (!jedges.is_array() || jedges.empty())
        throw input_error("'edges' must be a nonempty array");
    if (!jdarts.is_object()) throw input_error("'darts' must be an object");
    if (!jboundary.is_array()) throw input_error("'boundary' must be an array");

    // Intern every symbol-shaped weight up front, in sorted order, so the
    // polynomial variable order does not depend on element order.
    std::set<std::string> names;
    auto collect = [&](const json& arr) {
        for (auto& item : arr) {
            std::string w = get_weight_string(get_field(item, "weight", "element"),
                                              "weight");
            if (is_symbol_name(w)) names.insert(w);
        }
    };
    collect(jverts);
    collect(jedges);
    SymbolTable symbols;
    for (auto& n : names) symbols.intern(n);

    // Vertices.
    std::map<long long, VertexId> vertex_by_ext;
    std::vector<long long> vertex_ext_ids;
    std::vector<Weight> vweights;
    for (auto& jv : jverts) {
        long long id = get_int(get_field(jv, "id", "vertex"), "vertex id");
        if (!vertex_by_ext.emplace(id, (VertexId)vertex_ext_ids.size()).second)
            throw input_error("duplicate vertex id " + std::to_string(id));
        vertex_ext_ids.push_back(id);
        vweights.push_back(parse_weight(
            get_weight_string(get_field(jv, "weight", "vertex"), "vertex weight"),
            symbols));
    }

    // Edges; the first listed dart of edge k becomes internal dart 2k.
    std::map<long long, Dart> dart_by_ext;
    std::vector<long long> dart_ext_ids;
    std::vector<long long> edge_ext_ids;
    std::set<long long> edge_ids_seen;
    std::vector<Weight> eweights;
    for (auto& je : jedges) {
        long long id = get_int(get_field(je, "id", "edge"), "edge id");
        if (!edge_ids_seen.insert(id).second)
            throw input_error("duplicate edge id " + std::to_string(id));
        const json& dd = get_field(je, "darts", "edge");
        if (!dd.is_array() || dd.size() != 2)
            throw input_error("edge " + std::to_string(id) +
                              " must list exactly two darts");
        long long d0 = get_int(dd[0], "dart id");
        long long d1 = get_int(dd[1], "dart id");
        if (d0 == d1)
            throw input_error("edge " + std::to_string(id) +
                              " lists the same dart twice");
        for (long long ext : {d0, d1}) {
            if (!dart_by_ext.emplace(ext, (Dart)dart_ext_ids.size()).second)
                throw input_error("dart " + std::to_string(ext) +
                                  " belongs to two edges");
            dart_ext_ids.push_back(ext);
        }
        edge_ext_ids.push_back(id);
        eweights.push_back(parse_weight(
            get_weight_string(get_field(je, "weight", "edge"), "edge weight"),
            symbols));
    }

    // Rotations.
    std::vector<std::vector<Dart>> rotations(vertex_ext_ids.size());
    for (auto& [key, jlist] : jdarts.items()) {
        long long vid;
        try {
            std::size_t used = 0;
            vid = std::stoll(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw input_error("bad vertex key in 'darts': " + key);
        }
        auto it = vertex_by_ext.find(vid);
        if (it == vertex_by_ext.end())
            throw input_error("'darts' names unknown vertex " + key);
        if (!jlist.is_array() || jlist.empty())
            throw input_error("rotation of vertex " + key +
                              " must be a nonempty array");
        auto& rot = rotations[it->second];
        if (!rot.empty())
            throw input_error("vertex " + key + " has two rotation lists");
        for (auto& jd : jlist) {
            long long ext = get_int(jd, "dart id");
            auto dit = dart_by_ext.find(ext);
            if (dit == dart_by_ext.end())
                throw input_error("rotation of vertex " + key +
                                  " names unknown dart " + std::to_string(ext));
            rot.push_back(dit->second);
        }
    }
    for (std::size_t v = 0; v < rotations.size(); ++v)
        if (rotations[v].empty())
            throw input_error("vertex " + std::to_string(vertex_ext_ids[v]) +
                              " has no rotation list");

    // Boundary walks.
    std::vector<std::vector<Dart>> walks;
    for (auto& jwalk : jboundary) {
        if (!jwalk.is_array() || jwalk.empty())
            throw input_error("each boundary walk must be a nonempty array");
        std::vector<Dart> walk;
        for (auto& jd : jwalk) {
            long long ext = get_int(jd, "boundary dart");
            auto dit = dart_by_ext.find(ext);
            if (dit == dart_by_ext.end())
                throw input_error("boundary walk names unknown dart " +
                                  std::to_string(ext));
            walk.push_back(dit->second);
        }
        walks.push_back(std::move(walk));
    }

    Graph g(Map(vertex_ext_ids.size(), std::move(rotations)), std::move(vweights),
            std::move(eweights), std::move(walks), std::move(symbols));
    g.vertex_ext = std::move(vertex_ext_ids);
    g.edge_ext = std::move(edge_ext_ids);
    g.dart_ext = std::move(dart_ext_ids);
    g.next_vertex_ext_ = *std::max_element(g.vertex_ext.begin(), g.vertex_ext.end()) + 1;
    g.next_edge_ext_ = *std::max_element(g.edge_ext.begin(), g.edge_ext.end()) + 1;
    g.next_dart_ext_ = *std::max_element(g.dart_ext.begin(), g.dart_ext.end()) + 1;
    return g;
}

Graph Graph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load(buf.str());
}

std::string Graph::save() const {
    json doc;
    doc["vertices"] = json::array();
    for (std::size_t v = 0; v < map.vertex_count(); ++v)
        doc["vertices"].push_back({{"id", vertex_ext[v]},
                                   {"weight", vertex_weights[v].to_string(symbols)}});
    doc["darts"] = json::object();
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
        json rot = json::array();
        for (Dart d : map.darts_at(v)) rot.push_back(dart_ext[d]);
        doc["darts"][std::to_string(vertex_ext[v])] = std::move(rot);
    }
    doc["edges"] = json::array();
    for (EdgeId e = 0; e < map.edge_count(); ++e)
        doc["edges"].push_back(
            {{"id", edge_ext[e]},
             {"darts", {dart_ext[Map::edge_dart(e, 0)], dart_ext[Map::edge_dart(e, 1)]}},
             {"weight", edge_weights[e].to_string(symbols)}});
    doc["boundary"] = json::array();
    for (auto& walk : boundary) {
        json jwalk = json::array();
        for (Dart d : walk) jwalk.push_back(dart_ext[d]);
        doc["boundary"].push_back(std::move(jwalk));
    }
    return doc.dump(2) + "\n";
}

} // namespace mdsurf
