// Copyright 2026 The mcbc Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

/// \file graph.hpp
/// \brief Immutable CSR graph, signed edge contraction with a replayable
/// trace, and block (biconnected component) decomposition.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/instance_io.hpp"

namespace mcbc {

struct Arc {
    VertexId head;
    EdgeId edge;
    double weight;
};

struct Edge {
    VertexId u;  // u < v
    VertexId v;
    double weight;
};

/// Simple undirected weighted graph in compressed-sparse-row form. Every
/// undirected edge appears in both endpoint lists; lists are sorted by head.
class WeightedGraph {
 public:
    WeightedGraph() = default;

    WeightedGraph(VertexId n, std::vector<Edge> edges, bool all_integral = false)
        : n_(n), edges_(std::move(edges)), all_integral_(all_integral) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        std::vector<std::int32_t> deg(static_cast<std::size_t>(n) + 1, 0);
        for (auto& e : edges_) {
            if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw std::invalid_argument("vertex out of range");
            if (e.u > e.v) std::swap(e.u, e.v);
            ++deg[e.u];
            ++deg[e.v];
        }
        offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (VertexId v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
        arcs_.resize(2 * edges_.size());
        std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
            const auto& e = edges_[id];
            arcs_[fill[e.u]++] = {e.v, id, e.weight};
            arcs_[fill[e.v]++] = {e.u, id, e.weight};
        }
        for (VertexId v = 0; v < n; ++v) {
            auto first = arcs_.begin() + offsets_[v];
            auto last = arcs_.begin() + offsets_[v + 1];
            std::sort(first, last, [](const Arc& a, const Arc& b) { return a.head < b.head; });
            for (auto it = first; it != last && it + 1 != last; ++it)
                if (it->head == (it + 1)->head) throw std::invalid_argument("parallel edge");
        }
    }

    VertexId vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    bool all_integral() const { return all_integral_; }

    std::span<const Arc> neighbors(VertexId v) const {
        return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
    }
    std::int32_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const std::int32_t> csr_offsets() const { return offsets_; }

    EdgeId find_edge(VertexId u, VertexId v) const {
        const auto nb = neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v, [](const Arc& a, VertexId x) { return a.head < x; });
        return (it != nb.end() && it->head == v) ? it->edge : kNoEdge;
    }

    double weight(EdgeId e) const { return edges_[e].weight; }

    /// Sum of |w| over the edges incident to v.
    double abs_incident_weight(VertexId v) const {
        double s = 0.0;
        for (const auto& a : neighbors(v)) s += std::abs(a.weight);
        return s;
    }

    double abs_total_weight() const {
        double s = 0.0;
        for (const auto& e : edges_) s += std::abs(e.weight);
        return s;
    }

 private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int32_t> offsets_{0};
    std::vector<Arc> arcs_;
    bool all_integral_ = false;
};

/// Converts a parsed instance to 0-based CSR form; zero-weight edges are dropped.
inline WeightedGraph build_graph(const RawMaxCutInstance& raw) {
    std::vector<Edge> edges;
    edges.reserve(raw.edges.size());
    for (const auto& e : raw.edges)
        if (e.w != 0.0) edges.push_back({e.u - 1, e.v - 1, e.w});
    return WeightedGraph(raw.num_vertices, std::move(edges), raw.all_integral);
}

inline double cut_weight(const WeightedGraph& g, std::span<const std::uint8_t> y) {
    double s = 0.0;
    for (const auto& e : g.edges())
        if (y[e.u] != y[e.v]) s += e.weight;
    return s;
}

/// Edge-incidence vector of the cut induced by y.
inline std::vector<double> cut_vector(const WeightedGraph& g, std::span<const std::uint8_t> y) {
    std::vector<double> x(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) x[e] = y[g.edge(e).u] != y[g.edge(e).v] ? 1.0 : 0.0;
    return x;
}

// ---------------------------------------------------------------------------
// Contraction

enum class ContractMode { same_side, opposite_side };

struct TraceRecord {
    enum class Kind { contract_same, contract_opposite, fix_vertex };
    Kind kind;
    VertexId survivor;  // for fix_vertex: the fixed vertex
    VertexId absorbed;  // for fix_vertex: the side (0/1)
};

/// Ordered log of contractions. Vertex ids are stable: an absorbed vertex
/// stays in the id space as an isolated vertex.
struct ReductionTrace {
    std::vector<TraceRecord> records;
    /// Weight that every reduced-instance cut gains when lifted.
    double offset = 0.0;

    /// Lifts an assignment of the reduced instance back to the original one.
    Assignment lift(Assignment y) const {
        for (auto it = records.rbegin(); it != records.rend(); ++it) {
            switch (it->kind) {
                case TraceRecord::Kind::contract_same: y[it->absorbed] = y[it->survivor]; break;
                case TraceRecord::Kind::contract_opposite: y[it->absorbed] = 1 - y[it->survivor]; break;
                case TraceRecord::Kind::fix_vertex: y[it->survivor] = static_cast<std::uint8_t>(it->absorbed); break;
            }
        }
        return y;
    }
};

struct ContractRequest {
    VertexId u;
    VertexId v;
    ContractMode mode;
};

/// Contracts a batch of vertex pairs at once and rebuilds the CSR. Pairs that
/// are already merged with consistent parity are ignored; inconsistent ones
/// throw. The lower-indexed representative survives each merge.
inline WeightedGraph contract_pairs(const WeightedGraph& g, std::span<const ContractRequest> requests,
                                    ReductionTrace& trace) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> rep(n);
    std::vector<std::uint8_t> par(n, 0);  // parity relative to rep
    std::vector<std::vector<VertexId>> members(n);
    for (VertexId v = 0; v < n; ++v) {
        rep[v] = v;
        members[v] = {v};
    }
    for (const auto& r : requests) {
        if (r.u < 0 || r.v < 0 || r.u >= n || r.v >= n || r.u == r.v)
            throw std::invalid_argument("invalid contraction pair");
        const std::uint8_t odd = r.mode == ContractMode::opposite_side ? 1 : 0;
        const VertexId ru = rep[r.u];
        const VertexId rv = rep[r.v];
        const std::uint8_t rel = par[r.u] ^ par[r.v] ^ odd;  // parity between ru and rv
        if (ru == rv) {
            if (rel != 0) throw std::invalid_argument("contradictory contraction");
            continue;
        }
        const VertexId keep = std::min(ru, rv);
        const VertexId gone = std::max(ru, rv);
        trace.records.push_back({rel ? TraceRecord::Kind::contract_opposite : TraceRecord::Kind::contract_same,
                                 keep, gone});
        for (VertexId m : members[gone]) {
            rep[m] = keep;
            par[m] ^= rel;
        }
        members[keep].insert(members[keep].end(), members[gone].begin(), members[gone].end());
        members[gone].clear();
    }

    std::map<std::pair<VertexId, VertexId>, double> merged;
    double offset = 0.0;
    for (const auto& e : g.edges()) {
        const VertexId a = rep[e.u];
        const VertexId b = rep[e.v];
        const bool flip = (par[e.u] ^ par[e.v]) != 0;
        if (flip) offset += e.weight;
        if (a == b) continue;
        merged[std::minmax(a, b)] += flip ? -e.weight : e.weight;
    }
    trace.offset += offset;
    std::vector<Edge> edges;
    edges.reserve(merged.size());
    for (const auto& [key, w] : merged) {
        if (std::abs(w) <= kZeroWeight) continue;
        edges.push_back({key.first, key.second, w});
    }
    return WeightedGraph(n, std::move(edges), g.all_integral());
}

/// Contracts edge e: same_side fixes x(e)=0, opposite_side fixes x(e)=1
/// (the absorbed endpoint's incident weights are negated first).
inline WeightedGraph contract_edge(const WeightedGraph& g, EdgeId e, ContractMode mode, ReductionTrace& trace) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("no such edge " + std::to_string(e));
    const ContractRequest req{g.edge(e).u, g.edge(e).v, mode};
    return contract_pairs(g, std::span(&req, 1), trace);
}

// ---------------------------------------------------------------------------
// Subgraphs and blocks

struct Subgraph {
    WeightedGraph graph;
    std::vector<VertexId> vertices;  // local -> parent vertex
    std::vector<EdgeId> edges;       // local -> parent edge
};

/// Subgraph spanned by the given edges, with vertices renumbered by
/// increasing parent id.
inline Subgraph edge_induced_subgraph(const WeightedGraph& g, std::span<const EdgeId> edge_ids) {
    Subgraph sub;
    std::vector<VertexId> local(g.vertex_count(), kNoVertex);
    for (EdgeId e : edge_ids) {
        sub.vertices.push_back(g.edge(e).u);
        sub.vertices.push_back(g.edge(e).v);
    }
    std::sort(sub.vertices.begin(), sub.vertices.end());
    sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()), sub.vertices.end());
    for (std::size_t i = 0; i < sub.vertices.size(); ++i) local[sub.vertices[i]] = static_cast<VertexId>(i);
    sub.edges.assign(edge_ids.begin(), edge_ids.end());
    std::sort(sub.edges.begin(), sub.edges.end());
    std::vector<Edge> edges;
    edges.reserve(sub.edges.size());
    for (EdgeId e : sub.edges) edges.push_back({local[g.edge(e).u], local[g.edge(e).v], g.edge(e).weight});
    sub.graph = WeightedGraph(static_cast<VertexId>(sub.vertices.size()), std::move(edges), g.all_integral());
    return sub;
}

/// Calls fn(a, b, c, e_ab, e_ac, e_bc) once per triangle a < b < c. Vertices
/// with degree above `degree_cap` are not used as the enumeration source.
/// If fn returns bool, returning false stops the enumeration.
template <class Fn>
void for_each_triangle(const WeightedGraph& g, std::int32_t degree_cap, Fn&& fn) {
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        if (g.degree(a) > degree_cap) continue;
        const auto na = g.neighbors(a);
        for (const auto& ab : na) {
            const VertexId b = ab.head;
            if (b <= a) continue;
            const auto nb = g.neighbors(b);
            auto ia = std::upper_bound(na.begin(), na.end(), b, [](VertexId x, const Arc& r) { return x < r.head; });
            auto ib = std::upper_bound(nb.begin(), nb.end(), b, [](VertexId x, const Arc& r) { return x < r.head; });
            while (ia != na.end() && ib != nb.end()) {
                if (ia->head < ib->head) {
                    ++ia;
                } else if (ib->head < ia->head) {
                    ++ib;
                } else {
                    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, VertexId, VertexId, VertexId, EdgeId,
                                                                      EdgeId, EdgeId>,
                                                 bool>) {
                        if (!fn(a, b, ia->head, ab.edge, ia->edge, ib->edge)) return;
                    } else {
                        fn(a, b, ia->head, ab.edge, ia->edge, ib->edge);
                    }
                    ++ia;
                    ++ib;
                }
            }
        }
    }
}

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;  // edge-disjoint, cover all edges
    std::vector<VertexId> articulation_points;
};

/// Iterative Tarjan over edges. Bridges come out as single-edge blocks.
inline BlockDecomposition biconnected_components(const WeightedGraph& g) {
    const VertexId n = g.vertex_count();
    BlockDecomposition out;
    std::vector<std::int32_t> disc(n, -1), low(n, 0);
    std::vector<std::uint8_t> is_art(n, 0);
    std::vector<EdgeId> edge_stack;
    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        std::int32_t next;  // index into neighbors
        std::int32_t children;
    };
    std::vector<Frame> stack;
    std::int32_t timer = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != -1 || g.degree(root) == 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, kNoEdge, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nb = g.neighbors(f.v);
            if (f.next < static_cast<std::int32_t>(nb.size())) {
                const Arc a = nb[f.next++];
                if (a.edge == f.parent_edge) continue;
                if (disc[a.head] == -1) {
                    edge_stack.push_back(a.edge);
                    disc[a.head] = low[a.head] = timer++;
                    ++f.children;
                    stack.push_back({a.head, a.edge, 0, 0});
                } else if (disc[a.head] < disc[f.v]) {
                    edge_stack.push_back(a.edge);
                    low[f.v] = std::min(low[f.v], disc[a.head]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) is_art[done.v] = 1;
                break;
            }
            Frame& parent = stack.back();
            low[parent.v] = std::min(low[parent.v], low[done.v]);
            if (low[done.v] >= disc[parent.v]) {
                if (parent.parent_edge != kNoEdge) is_art[parent.v] = 1;
                std::vector<EdgeId> block;
                while (true) {
                    const EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == done.parent_edge) break;
                }
                std::sort(block.begin(), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (is_art[v]) out.articulation_points.push_back(v);
    return out;
}

}  // namespace mcbc
