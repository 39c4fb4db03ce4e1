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

/// \file separation.hpp
/// \brief Separation of odd-cycle inequalities.
///
/// The exact routine searches the doubled graph H: every vertex v has copies
/// v' and v''; an edge e = {v, w} yields arcs v'w' and v''w'' of length x_e
/// and arcs v'w'' and v''w' of length 1 - x_e. A v'-v'' path of length < 1
/// projects to a closed walk whose crossing edges F have odd cardinality and
/// whose inequality is violated by 1 - length.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/graph.hpp"
#include "mcbc/lp.hpp"

namespace mcbc {

struct SeparationOptions {
    double threshold = 1e-5;       // minimum violation of an emitted cut
    double skip_eps = 1e-6;        // arcs of length >= 1 - skip_eps are omitted
    double zero_eps = 1e-9;        // arcs of length <= zero_eps are contracted (if enabled)
    bool contract_zeros = false;
    bool extra_paths = true;
    bool chordless = true;
    std::int64_t triangle_budget = 50000;
    std::int32_t max_cuts_per_round = -1;  // < 0: 2 |V|
};

// ---------------------------------------------------------------------------
// Auxiliary graph

struct AuxArc {
    std::int32_t head;
    EdgeId edge;
    std::uint8_t cross;
    double length;
};

/// CSR over 2|V| vertices; v' = v, v'' = v + |V|. With zero contraction,
/// vertices joined by (near) zero-length arcs share a node.
struct AuxGraph {
    std::int32_t base_vertices = 0;
    std::vector<std::int32_t> offsets;
    std::vector<AuxArc> arcs;
    std::vector<std::int32_t> node_of;                 // aux vertex -> node
    std::vector<std::vector<std::int32_t>> members;    // node -> aux vertices
    double zero_eps = 0.0;
    bool contracted = false;

    std::int32_t size() const { return 2 * base_vertices; }
    std::int32_t twin(std::int32_t a) const { return a < base_vertices ? a + base_vertices : a - base_vertices; }
    std::int32_t base(std::int32_t a) const { return a < base_vertices ? a : a - base_vertices; }
    std::span<const AuxArc> out(std::int32_t a) const {
        return {arcs.data() + offsets[a], static_cast<std::size_t>(offsets[a + 1] - offsets[a])};
    }
};

inline AuxGraph build_aux_graph(const WeightedGraph& g, std::span<const double> x, double skip_eps = 1e-6,
                                bool contract_zeros = false, double zero_eps = 1e-9) {
    AuxGraph h;
    const std::int32_t n = g.vertex_count();
    h.base_vertices = n;
    h.offsets.assign(2 * n + 1, 0);
    for (std::int32_t a = 0; a < 2 * n; ++a) {
        std::int32_t cnt = 0;
        for (const auto& arc : g.neighbors(h.base(a))) {
            const double xe = x[arc.edge];
            if (xe < 1.0 - skip_eps) ++cnt;
            if (1.0 - xe < 1.0 - skip_eps) ++cnt;
        }
        h.offsets[a + 1] = h.offsets[a] + cnt;
    }
    h.arcs.resize(h.offsets.back());
    for (std::int32_t a = 0; a < 2 * n; ++a) {
        std::int32_t k = h.offsets[a];
        const std::int32_t shift = a < n ? 0 : n;
        for (const auto& arc : g.neighbors(h.base(a))) {
            const double xe = std::clamp(x[arc.edge], 0.0, 1.0);
            if (xe < 1.0 - skip_eps) h.arcs[k++] = {arc.head + shift, arc.edge, 0, xe};
            if (1.0 - xe < 1.0 - skip_eps) h.arcs[k++] = {arc.head + (n - shift), arc.edge, 1, 1.0 - xe};
        }
    }
    h.node_of.resize(2 * n);
    h.contracted = contract_zeros;
    h.zero_eps = zero_eps;
    if (!contract_zeros) {
        std::iota(h.node_of.begin(), h.node_of.end(), 0);
        h.members.resize(2 * n);
        for (std::int32_t a = 0; a < 2 * n; ++a) h.members[a] = {a};
        return h;
    }
    std::vector<std::int32_t> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::int32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::int32_t a = 0; a < 2 * n; ++a)
        for (const auto& arc : h.out(a))
            if (arc.length <= zero_eps) {
                const auto ra = find(a), rb = find(arc.head);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
    std::vector<std::int32_t> id(2 * n, -1);
    for (std::int32_t a = 0; a < 2 * n; ++a) {
        const auto r = find(a);
        if (id[r] < 0) {
            id[r] = static_cast<std::int32_t>(h.members.size());
            h.members.emplace_back();
        }
        h.node_of[a] = id[r];
        h.members[id[r]].push_back(a);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Shortest paths

/// Binary min-heap keyed by double with a position array for decrease-key.
class IndexedHeap {
 public:
    explicit IndexedHeap(std::int32_t capacity) : pos_(capacity, -1) {}

    bool empty() const { return heap_.empty(); }
    std::pair<double, std::int32_t> top() const { return heap_.front(); }
    bool contains(std::int32_t id) const { return pos_[id] >= 0; }

    void push_or_decrease(std::int32_t id, double key) {
        if (pos_[id] < 0) {
            pos_[id] = static_cast<std::int32_t>(heap_.size());
            heap_.emplace_back(key, id);
            up(pos_[id]);
        } else if (key < heap_[pos_[id]].first) {
            heap_[pos_[id]].first = key;
            up(pos_[id]);
        }
    }

    std::pair<double, std::int32_t> pop() {
        auto t = heap_.front();
        pos_[t.second] = -1;
        if (heap_.size() > 1) {
            heap_.front() = heap_.back();
            pos_[heap_.front().second] = 0;
            heap_.pop_back();
            down(0);
        } else {
            heap_.pop_back();
        }
        return t;
    }

 private:
    bool less(std::size_t i, std::size_t j) const {
        return heap_[i].first < heap_[j].first || (heap_[i].first == heap_[j].first && heap_[i].second < heap_[j].second);
    }
    void swap_at(std::size_t i, std::size_t j) {
        std::swap(heap_[i], heap_[j]);
        pos_[heap_[i].second] = static_cast<std::int32_t>(i);
        pos_[heap_[j].second] = static_cast<std::int32_t>(j);
    }
    void up(std::size_t i) {
        while (i > 0) {
            const std::size_t p = (i - 1) / 2;
            if (!less(i, p)) break;
            swap_at(i, p);
            i = p;
        }
    }
    void down(std::size_t i) {
        for (;;) {
            std::size_t best = i;
            const std::size_t l = 2 * i + 1, r = l + 1;
            if (l < heap_.size() && less(l, best)) best = l;
            if (r < heap_.size() && less(r, best)) best = r;
            if (best == i) break;
            swap_at(i, best);
            i = best;
        }
    }

    std::vector<std::pair<double, std::int32_t>> heap_;
    std::vector<std::int32_t> pos_;
};

struct DijkstraResult {
    std::int32_t source = -1;  // aux vertex v'
    std::vector<double> dist;  // per node; +inf if never labelled
    std::vector<std::uint8_t> settled;
    std::vector<std::int32_t> parent_tail;  // aux vertex the node was entered from
    std::vector<std::int32_t> parent_arc;   // index into AuxGraph::arcs
    bool hit_twin = false;

    double distance_to(const AuxGraph& h, std::int32_t a) const { return dist[h.node_of[a]]; }
    bool finalized(const AuxGraph& h, std::int32_t a) const { return settled[h.node_of[a]] != 0; }
};

/// Dijkstra from v' with early stop at labels >= 1 and the twin rule: a node
/// is not expanded if its label plus its twin's label is at least 1.
inline DijkstraResult dijkstra_mod(const AuxGraph& h, VertexId v) {
    const auto nodes = static_cast<std::int32_t>(h.members.size());
    DijkstraResult r;
    r.source = v;
    r.dist.assign(nodes, std::numeric_limits<double>::infinity());
    r.settled.assign(nodes, 0);
    r.parent_tail.assign(nodes, -1);
    r.parent_arc.assign(nodes, -1);
    const auto src = h.node_of[v];
    const auto target = h.node_of[h.twin(v)];
    IndexedHeap heap(nodes);
    r.dist[src] = 0.0;
    heap.push_or_decrease(src, 0.0);
    while (!heap.empty()) {
        const auto [d, node] = heap.top();
        if (d >= 1.0) break;
        heap.pop();
        r.settled[node] = 1;
        if (node == target) r.hit_twin = true;
        const auto tw = h.node_of[h.twin(h.members[node].front())];
        if (node != target && tw != node) {
            const double dt = r.settled[tw] ? r.dist[tw] : d;
            if (d + dt >= 1.0) continue;
        }
        for (const auto a : h.members[node]) {
            for (std::int32_t k = h.offsets[a]; k < h.offsets[a + 1]; ++k) {
                const auto& arc = h.arcs[k];
                const auto nb = h.node_of[arc.head];
                if (nb == node || r.settled[nb]) continue;
                const double nd = d + arc.length;
                if (nd < r.dist[nb]) {
                    r.dist[nb] = nd;
                    r.parent_tail[nb] = a;
                    r.parent_arc[nb] = k;
                    heap.push_or_decrease(nb, nd);
                }
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Walks and cycles

/// Closed walk in G: vertices[0] == vertices.back(); edge i joins vertices i, i+1.
struct ClosedWalk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    std::vector<std::uint8_t> cross;  // membership in F

    double length(std::span<const double> x) const {
        double s = 0.0;
        for (std::size_t i = 0; i < edges.size(); ++i) s += cross[i] ? 1.0 - x[edges[i]] : x[edges[i]];
        return s;
    }
};

/// Simple cycle: edge i joins vertices i and (i+1) mod k.
struct OrderedCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    std::vector<std::uint8_t> in_f;

    std::size_t size() const { return edges.size(); }
    double length(std::span<const double> x) const {
        double s = 0.0;
        for (std::size_t i = 0; i < edges.size(); ++i) s += in_f[i] ? 1.0 - x[edges[i]] : x[edges[i]];
        return s;
    }
    bool odd() const { return std::count(in_f.begin(), in_f.end(), std::uint8_t{1}) % 2 == 1; }
    CycleCut cut() const { return CycleCut{edges, in_f}; }
};

namespace detail {

inline std::int32_t arc_tail(const AuxGraph& h, std::int32_t k) {
    return static_cast<std::int32_t>(std::upper_bound(h.offsets.begin(), h.offsets.end(), k) - h.offsets.begin() - 1);
}

/// Aux-vertex path from the node entry `from` to `to` inside one contracted
/// node, using zero-length arcs; returns arc indices in order.
inline std::vector<std::int32_t> zero_path(const AuxGraph& h, std::int32_t from, std::int32_t to) {
    if (from == to) return {};
    const auto node = h.node_of[from];
    std::vector<std::int32_t> via;  // arc index used to reach each member
    std::vector<std::int32_t> members = h.members[node];
    std::sort(members.begin(), members.end());
    auto idx = [&](std::int32_t a) {
        return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), a) - members.begin());
    };
    via.assign(members.size(), -2);
    std::vector<std::int32_t> queue{from};
    via[idx(from)] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const auto a = queue[qi];
        if (a == to) break;
        for (std::int32_t k = h.offsets[a]; k < h.offsets[a + 1]; ++k) {
            const auto& arc = h.arcs[k];
            if (arc.length > h.zero_eps || h.node_of[arc.head] != node) continue;
            auto& slot = via[idx(arc.head)];
            if (slot != -2) continue;
            slot = k;
            queue.push_back(arc.head);
        }
    }
    std::vector<std::int32_t> path;
    for (auto a = to; a != from;) {
        const auto k = via[idx(a)];
        path.push_back(k);
        a = arc_tail(h, k);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

/// Arc indices of the shortest path from the search source to aux vertex a.
inline std::vector<std::int32_t> aux_path(const AuxGraph& h, const DijkstraResult& r, std::int32_t a) {
    std::vector<std::int32_t> rev;
    std::int32_t cur = a;
    for (;;) {
        const auto node = h.node_of[cur];
        const bool is_source = node == h.node_of[r.source];
        const std::int32_t entry = is_source ? r.source : h.arcs[r.parent_arc[node]].head;
        auto inner = h.contracted ? detail::zero_path(h, entry, cur) : std::vector<std::int32_t>{};
        for (auto it = inner.rbegin(); it != inner.rend(); ++it) rev.push_back(*it);
        if (is_source) break;
        rev.push_back(r.parent_arc[node]);
        cur = r.parent_tail[node];
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

/// Projects a sequence of aux arcs starting at aux vertex `start` into G.
inline ClosedWalk project_walk(const AuxGraph& h, std::int32_t start, std::span<const std::int32_t> arcs) {
    ClosedWalk w;
    w.vertices.push_back(h.base(start));
    for (const auto k : arcs) {
        const auto& arc = h.arcs[k];
        w.edges.push_back(arc.edge);
        w.cross.push_back(arc.cross);
        w.vertices.push_back(h.base(arc.head));
    }
    return w;
}

/// Splits a closed walk into simple cycles (stack based). Two-edge
/// back-and-forth pieces and pieces with even |F| are dropped.
inline std::vector<OrderedCycle> extract_simple_cycles(const ClosedWalk& walk) {
    std::vector<OrderedCycle> out;
    if (walk.edges.empty()) return out;
    std::vector<VertexId> stack_v{walk.vertices.front()};
    std::vector<EdgeId> stack_e;
    std::vector<std::uint8_t> stack_f;
    std::vector<std::pair<VertexId, std::size_t>> where{{walk.vertices.front(), 0}};
    auto position = [&](VertexId v) -> std::int64_t {
        for (std::size_t i = where.size(); i-- > 0;)
            if (where[i].first == v) return static_cast<std::int64_t>(where[i].second);
        return -1;
    };
    for (std::size_t i = 0; i < walk.edges.size(); ++i) {
        const VertexId next = walk.vertices[i + 1];
        stack_e.push_back(walk.edges[i]);
        stack_f.push_back(walk.cross[i]);
        const auto p = position(next);
        if (p < 0) {
            stack_v.push_back(next);
            where.emplace_back(next, stack_v.size() - 1);
            continue;
        }
        const auto start = static_cast<std::size_t>(p);
        OrderedCycle c;
        c.vertices.assign(stack_v.begin() + static_cast<std::ptrdiff_t>(start), stack_v.end());
        c.edges.assign(stack_e.begin() + static_cast<std::ptrdiff_t>(start), stack_e.end());
        c.in_f.assign(stack_f.begin() + static_cast<std::ptrdiff_t>(start), stack_f.end());
        stack_v.resize(start + 1);
        stack_e.resize(start);
        stack_f.resize(start);
        while (!where.empty() && where.back().second > start) where.pop_back();
        if (c.edges.size() >= 3 && c.odd()) out.push_back(std::move(c));
    }
    return out;
}

namespace detail {

struct ChordCandidate {
    std::size_t size;
    double length;
    std::size_t i, j;  // cycle positions, i < j
    bool inner;        // vertices i..j (true) or j..k-1,0..i (false)
    EdgeId chord;
    std::uint8_t chord_in_f;
};

inline OrderedCycle sub_cycle(const OrderedCycle& c, const ChordCandidate& r) {
    OrderedCycle s;
    const std::size_t k = c.size();
    if (r.inner) {
        for (std::size_t t = r.i; t < r.j; ++t) {
            s.vertices.push_back(c.vertices[t]);
            s.edges.push_back(c.edges[t]);
            s.in_f.push_back(c.in_f[t]);
        }
        s.vertices.push_back(c.vertices[r.j]);
    } else {
        for (std::size_t t = r.j; t != r.i; t = (t + 1) % k) {
            s.vertices.push_back(c.vertices[t]);
            s.edges.push_back(c.edges[t]);
            s.in_f.push_back(c.in_f[t]);
        }
        s.vertices.push_back(c.vertices[r.i]);
    }
    s.edges.push_back(r.chord);
    s.in_f.push_back(r.chord_in_f);
    return s;
}

inline void chordless_rec(const WeightedGraph& g, const OrderedCycle& c, std::span<const double> x,
                          std::vector<std::int32_t>& index_of, std::vector<OrderedCycle>& out) {
    const std::size_t k = c.size();
    std::vector<std::int32_t> f(k + 1, 0);
    std::vector<double> q(k + 1, 0.0);
    for (std::size_t t = 0; t < k; ++t) {
        f[t + 1] = f[t] + c.in_f[t];
        q[t + 1] = q[t] + (c.in_f[t] ? 1.0 - x[c.edges[t]] : x[c.edges[t]]);
    }
    for (std::size_t t = 0; t < k; ++t) index_of[c.vertices[t]] = static_cast<std::int32_t>(t);
    std::vector<ChordCandidate> queue;
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& arc : g.neighbors(c.vertices[i])) {
            const auto jj = index_of[arc.head];
            if (jj < 0) continue;
            const auto j = static_cast<std::size_t>(jj);
            if (j <= i + 1 || (i == 0 && j == k - 1)) continue;  // cycle edge or duplicate
            const double xc = x[arc.edge];
            // inner cycle i..j
            const bool even_in = (f[j] - f[i]) % 2 == 0;
            const double len_in = q[j] - q[i] + (even_in ? 1.0 - xc : xc);
            if (len_in < 1.0 - 1e-12)
                queue.push_back({j - i + 1, len_in, i, j, true, arc.edge, static_cast<std::uint8_t>(even_in)});
            const bool even_out = (f[k] - (f[j] - f[i])) % 2 == 0;
            const double len_out = q[k] - (q[j] - q[i]) + (even_out ? 1.0 - xc : xc);
            if (len_out < 1.0 - 1e-12)
                queue.push_back({k - (j - i) + 1, len_out, i, j, false, arc.edge, static_cast<std::uint8_t>(even_out)});
        }
    }
    for (std::size_t t = 0; t < k; ++t) index_of[c.vertices[t]] = -1;
    if (queue.empty()) {
        out.push_back(c);
        return;
    }
    std::stable_sort(queue.begin(), queue.end(), [](const ChordCandidate& a, const ChordCandidate& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.length < b.length;
    });
    std::vector<std::uint8_t> marked(k, 0);
    std::vector<OrderedCycle> accepted;
    for (const auto& r : queue) {
        std::vector<std::size_t> interior;
        if (r.inner) {
            for (std::size_t t = r.i + 1; t < r.j; ++t) interior.push_back(t);
        } else {
            for (std::size_t t = (r.j + 1) % k; t != r.i; t = (t + 1) % k) interior.push_back(t);
        }
        if (std::any_of(interior.begin(), interior.end(), [&](std::size_t t) { return marked[t] != 0; })) continue;
        for (auto t : interior) marked[t] = 1;
        accepted.push_back(sub_cycle(c, r));
    }
    for (const auto& s : accepted) chordless_rec(g, s, x, index_of, out);
}

}  // namespace detail

/// Replaces a violated cycle by violated chordless sub-cycles obtained by
/// splitting along chords. A cycle without chords is returned unchanged.
inline std::vector<OrderedCycle> chordless_decompose(const WeightedGraph& g, const OrderedCycle& c,
                                                     std::span<const double> x) {
    std::vector<std::int32_t> index_of(g.vertex_count(), -1);
    std::vector<OrderedCycle> out;
    detail::chordless_rec(g, c, x, index_of, out);
    return out;
}

/// Walks obtained by joining the v'-u' path with the mirrored v'-u'' path,
/// for twins off the main v'-v'' path with d(u') + d(u'') < 1.
inline std::vector<ClosedWalk> symmetric_extra_paths(const AuxGraph& h, const DijkstraResult& r,
                                                     double max_length = 1.0) {
    std::vector<ClosedWalk> out;
    const std::int32_t n = h.base_vertices;
    const std::int32_t v = r.source;
    std::vector<std::uint8_t> on_path(2 * n, 0);
    if (r.hit_twin) {
        on_path[v] = on_path[h.twin(v)] = 1;
        for (const auto k : aux_path(h, r, h.twin(v))) on_path[h.arcs[k].head] = 1;
    }
    for (std::int32_t u = 0; u < n; ++u) {
        if (u == v) continue;
        const std::int32_t u1 = u, u2 = u + n;
        if (on_path[u1] || on_path[u2]) continue;
        if (!r.finalized(h, u1) || !r.finalized(h, u2)) continue;
        if (h.node_of[u1] == h.node_of[u2]) continue;
        const double len = r.distance_to(h, u1) + r.distance_to(h, u2);
        if (len >= max_length) continue;
        const auto p1 = aux_path(h, r, u1);
        const auto p2 = aux_path(h, r, u2);
        ClosedWalk w = project_walk(h, v, p1);
        // mirrored p2 reversed: from u' back to v'' along the same G edges
        for (auto it = p2.rbegin(); it != p2.rend(); ++it) {
            const auto& arc = h.arcs[*it];
            w.edges.push_back(arc.edge);
            w.cross.push_back(arc.cross);
            w.vertices.push_back(h.base(detail::arc_tail(h, *it)));
        }
        out.push_back(std::move(w));
    }
    return out;
}

/// All four odd-|F| inequalities on enumerated triangles.
inline std::vector<CycleCut> separate_triangles(const WeightedGraph& g, std::span<const double> x,
                                                double threshold = 1e-5, std::int64_t budget = 50000) {
    std::vector<CycleCut> out;
    std::int64_t seen = 0;
    for_each_triangle(g, std::numeric_limits<std::int32_t>::max(),
                      [&](VertexId, VertexId, VertexId, EdgeId ab, EdgeId ac, EdgeId bc) {
                          if (++seen > budget) return false;
                          const double a = x[ab], b = x[ac], c = x[bc];
                          if (a + b + c - 2.0 > threshold) out.push_back({{ab, ac, bc}, {1, 1, 1}});
                          if (a - b - c > threshold) out.push_back({{ab, ac, bc}, {1, 0, 0}});
                          if (b - a - c > threshold) out.push_back({{ab, ac, bc}, {0, 1, 0}});
                          if (c - a - b > threshold) out.push_back({{ab, ac, bc}, {0, 0, 1}});
                          return true;
                      });
    return out;
}

namespace detail {

inline void collect_from_walk(const WeightedGraph& g, const ClosedWalk& walk, std::span<const double> x,
                              const SeparationOptions& opt,
                              std::set<std::vector<std::pair<EdgeId, std::uint8_t>>>& seen,
                              std::vector<std::pair<double, CycleCut>>& found) {
    for (const auto& c : extract_simple_cycles(walk)) {
        const double viol = 1.0 - c.length(x);
        if (viol <= opt.threshold) continue;
        std::vector<OrderedCycle> pieces;
        if (opt.chordless) {
            for (auto& p : chordless_decompose(g, c, x))
                if (1.0 - p.length(x) > opt.threshold) pieces.push_back(std::move(p));
        }
        if (pieces.empty()) pieces.push_back(c);
        for (const auto& p : pieces) {
            auto cut = p.cut();
            if (!seen.insert(cut.key()).second) continue;
            found.emplace_back(1.0 - p.length(x), std::move(cut));
        }
    }
}

}  // namespace detail

/// Exact separation: returns violated cycle cuts (by more than the threshold)
/// if and only if one exists, best violations first, capped per round.
inline std::vector<CycleCut> separate_exact(const WeightedGraph& g, std::span<const double> x,
                                            const SeparationOptions& opt = {}) {
    const auto h = build_aux_graph(g, x, opt.skip_eps, opt.contract_zeros, opt.zero_eps);
    std::set<std::vector<std::pair<EdgeId, std::uint8_t>>> seen;
    std::vector<std::pair<double, CycleCut>> found;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue;
        const auto r = dijkstra_mod(h, v);
        const auto target = h.twin(v);
        if (r.hit_twin && r.distance_to(h, target) < 1.0 - opt.threshold) {
            const auto path = aux_path(h, r, target);
            detail::collect_from_walk(g, project_walk(h, v, path), x, opt, seen, found);
        }
        if (opt.extra_paths)
            for (const auto& w : symmetric_extra_paths(h, r, 1.0 - opt.threshold))
                detail::collect_from_walk(g, w, x, opt, seen, found);
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t cap =
        opt.max_cuts_per_round < 0 ? 2 * static_cast<std::size_t>(g.vertex_count()) : opt.max_cuts_per_round;
    if (found.size() > cap) found.resize(cap);
    std::vector<CycleCut> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

}  // namespace mcbc
