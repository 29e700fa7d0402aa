// Brute-force ground truth: enumerate monomer-dimer coverings (monomers only
// on boundary-circuit vertices) by branching on the smallest uncovered
// vertex. Works purely on adjacency lists — deliberately shares nothing with
// the Pfaffian evaluation path it is used to verify.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mdsurf/graph.hpp"
#include "mdsurf/ring.hpp"

namespace mdsurf {

struct MdCovering {
    std::vector<EdgeId> dimers;
    std::vector<VertexId> monomers;
};

inline constexpr std::size_t kOracleDefaultCap = 20;

namespace oracle_detail {

struct Adjacency {
    // adj[v] = (edge, other endpoint), in edge-id order.
    std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj;
    std::vector<bool> allow_monomer;

    explicit Adjacency(const Graph& g) : adj(g.map.vertex_count()) {
        for (EdgeId e = 0; e < g.map.edge_count(); ++e) {
            auto [u, v] = g.map.edge_ends(e);
            adj[u].push_back({e, v});
            adj[v].push_back({e, u});
        }
        allow_monomer.assign(g.map.vertex_count(), false);
        auto circ = g.vertex_circuit();
        for (std::size_t v = 0; v < circ.size(); ++v)
            allow_monomer[v] = circ[v] >= 0;
    }
};

template <class F>
void branch(const Adjacency& a, std::vector<bool>& covered, MdCovering& cur,
            VertexId from, bool monomers_allowed, F&& visit) {
    std::size_t n = covered.size();
    VertexId v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) {
        visit(const_cast<const MdCovering&>(cur));
        return;
    }
    covered[v] = true;
    if (monomers_allowed && a.allow_monomer[v]) {
        cur.monomers.push_back(v);
        branch(a, covered, cur, v + 1, monomers_allowed, visit);
        cur.monomers.pop_back();
    }
    for (auto [e, u] : a.adj[v]) {
        if (covered[u]) continue; // u > v is automatic: v is the smallest
        covered[u] = true;
        cur.dimers.push_back(e);
        branch(a, covered, cur, v + 1, monomers_allowed, visit);
        cur.dimers.pop_back();
        covered[u] = false;
    }
    covered[v] = false;
}

inline void guard(const Graph& g, std::size_t cap) {
    require(g.map.vertex_count() <= cap,
            "graph too large for brute-force enumeration");
}

} // namespace oracle_detail

// Every MD covering exactly once (monomers restricted to boundary vertices).
template <class F>
void enumerate_md(const Graph& g, F&& visit,
                  std::size_t cap = kOracleDefaultCap) {
    oracle_detail::guard(g, cap);
    oracle_detail::Adjacency a(g);
    std::vector<bool> covered(g.map.vertex_count(), false);
    MdCovering cur;
    oracle_detail::branch(a, covered, cur, 0, true, visit);
}

// Every perfect matching exactly once.
template <class F>
void enumerate_dimers(const Graph& g, F&& visit,
                      std::size_t cap = kOracleDefaultCap) {
    oracle_detail::guard(g, cap);
    oracle_detail::Adjacency a(g);
    std::vector<bool> covered(g.map.vertex_count(), false);
    MdCovering cur;
    oracle_detail::branch(a, covered, cur, 0, false,
                          [&](const MdCovering& c) { visit(c.dimers); });
}

template <class R>
R covering_weight(const Graph& g, const MdCovering& c) {
    R w = RingOps<R>::one();
    for (EdgeId e : c.dimers)
        w *= RingOps<R>::from_weight(g.edge_weights[e], g.symbols);
    for (VertexId v : c.monomers)
        w *= RingOps<R>::from_weight(g.vertex_weights[v], g.symbols);
    return w;
}

// Z split by beta sector: key = bitmask with bit k set iff the covering has
// an odd number of monomers on circuit k.
template <class R>
std::map<unsigned, R> oracle_Z_by_beta(const Graph& g,
                                       std::size_t cap = kOracleDefaultCap) {
    std::map<unsigned, R> out;
    auto circ = g.vertex_circuit();
    enumerate_md(
        g,
        [&](const MdCovering& c) {
            unsigned mask = 0;
            for (VertexId v : c.monomers) mask ^= 1u << circ[v];
            auto it = out.find(mask);
            if (it == out.end())
                out.emplace(mask, covering_weight<R>(g, c));
            else
                it->second += covering_weight<R>(g, c);
        },
        cap);
    return out;
}

template <class R>
R oracle_Z_beta(const Graph& g, unsigned beta_mask,
                std::size_t cap = kOracleDefaultCap) {
    R total = RingOps<R>::zero();
    auto circ = g.vertex_circuit();
    enumerate_md(
        g,
        [&](const MdCovering& c) {
            unsigned mask = 0;
            for (VertexId v : c.monomers) mask ^= 1u << circ[v];
            if (mask == beta_mask) total += covering_weight<R>(g, c);
        },
        cap);
    return total;
}

template <class R>
R oracle_Z_md(const Graph& g, std::size_t cap = kOracleDefaultCap) {
    R total = RingOps<R>::zero();
    enumerate_md(g, [&](const MdCovering& c) { total += covering_weight<R>(g, c); },
                 cap);
    return total;
}

template <class R>
R oracle_Z_dimers(const Graph& g, std::size_t cap = kOracleDefaultCap) {
    R total = RingOps<R>::zero();
    enumerate_dimers(
        g,
        [&](const std::vector<EdgeId>& dimers) {
            R w = RingOps<R>::one();
            for (EdgeId e : dimers)
                w *= RingOps<R>::from_weight(g.edge_weights[e], g.symbols);
            total += w;
        },
        cap);
    return total;
}

} // namespace mdsurf
