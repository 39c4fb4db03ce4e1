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

/// \file presolve.hpp
/// \brief Optimality-preserving reductions for MaxCut and the round-based
/// presolve loop that applies them through signed contractions.
///
/// All rules report candidates on an unchanged graph. The loop applies each
/// rule's candidates as one batch and skips a candidate as soon as one of the
/// vertices its test looked at has been touched by an earlier contraction of
/// the same batch; skipped candidates are re-detected in the next round.

#pragma once

#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/graph.hpp"

namespace mcbc {

struct EdgeFixing {
    EdgeId edge;
    std::uint8_t value;  // x(e)

    friend bool operator==(const EdgeFixing&, const EdgeFixing&) = default;
};

struct VertexMerge {
    VertexId u;
    VertexId v;
    bool opposite;  // y(u) = 1 - y(v) instead of y(u) = y(v)

    friend bool operator==(const VertexMerge&, const VertexMerge&) = default;
};

/// Edge e = {u,v} is fixed to 1 (w > 0) or 0 (w < 0) when
/// |w(e)| > sum of |w| over the other edges of delta({u}) or delta({v}).
/// Ties would be safe as well, but are left alone: a degree-2 vertex with
/// equal weights (e.g. on a unit cycle) carries no real domination.
inline std::vector<EdgeFixing> rule_dominating_edge(const WeightedGraph& g) {
    const WeightCompare cmp{g.all_integral()};
    std::vector<double> incident(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) incident[v] = g.abs_incident_weight(v);
    std::vector<EdgeFixing> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const double a = std::abs(ed.weight);
        if (cmp.gt(a, incident[ed.u] - a) || cmp.gt(a, incident[ed.v] - a))
            out.push_back({e, static_cast<std::uint8_t>(ed.weight > 0 ? 1 : 0)});
    }
    return out;
}

namespace detail {

/// Weights and incident sums of one triangle, viewed with edge {v1,v2} as
/// the distinguished edge.
struct TriangleView {
    double w12, w13, w23;
    double s1, s2, s3;  // sum |w| over delta({vi})

    // sum |w| over delta(V) minus the named triangle edges
    double ext_v1() const { return s1 - std::abs(w12) - std::abs(w13); }
    double ext_v2() const { return s2 - std::abs(w12) - std::abs(w23); }
    double ext_v2v3() const { return s2 + s3 - std::abs(w12) - std::abs(w13) - 2 * std::abs(w23); }
    double ext_v1v3() const { return s1 + s3 - std::abs(w12) - std::abs(w23) - 2 * std::abs(w13); }
};

}  // namespace detail

/// Triangle test concluding x(v1v2) = 0. Both conditions are checked with
/// V1 in {{v1},{v2,v3}} and V2 in {{v2},{v1,v3}}:
///   w(v1v3) - w(v1v2) >= sum |w| over delta(V1) \ {v1v2, v1v3}
///   w(v2v3) - w(v1v2) >= sum |w| over delta(V2) \ {v1v2, v2v3}
inline bool triangle_zero_holds(const detail::TriangleView& t, const WeightCompare& cmp) {
    const bool first = cmp.geq(t.w13 - t.w12, t.ext_v1()) || cmp.geq(t.w13 - t.w12, t.ext_v2v3());
    const bool second = cmp.geq(t.w23 - t.w12, t.ext_v2()) || cmp.geq(t.w23 - t.w12, t.ext_v1v3());
    return first && second;
}

/// Triangle test concluding x(v1v2) = 1, for w(v1v2) > 0, w(v1v3) > 0, w(v2v3) < 0:
///   w(v1v2) + w(v1v3) >= sum |w| over delta(V1) \ {v1v2, v1v3}
///   w(v1v2) - w(v2v3) >= sum |w| over delta(V2) \ {v1v2, v1v3}
inline bool triangle_one_holds(const detail::TriangleView& t, const WeightCompare& cmp) {
    if (!(t.w12 > 0 && t.w13 > 0 && t.w23 < 0)) return false;
    const bool first = cmp.geq(t.w12 + t.w13, t.ext_v1()) || cmp.geq(t.w12 + t.w13, t.ext_v2v3());
    const double rhs_v2 = t.s2 - std::abs(t.w12);
    const double rhs_v1v3 = t.s1 + t.s3 - std::abs(t.w12) - 2 * std::abs(t.w13);
    const bool second = cmp.geq(t.w12 - t.w23, rhs_v2) || cmp.geq(t.w12 - t.w23, rhs_v1v3);
    return first && second;
}

inline std::vector<EdgeFixing> rule_triangle_zero(const WeightedGraph& g, std::int32_t degree_cap = 512) {
    const WeightCompare cmp{g.all_integral()};
    std::vector<EdgeFixing> out;
    for_each_triangle(g, degree_cap, [&](VertexId a, VertexId b, VertexId c, EdgeId ab, EdgeId ac, EdgeId bc) {
        const double sa = g.abs_incident_weight(a), sb = g.abs_incident_weight(b), sc = g.abs_incident_weight(c);
        const double wab = g.weight(ab), wac = g.weight(ac), wbc = g.weight(bc);
        // distinguished edge {v1,v2} with v3 opposite
        if (triangle_zero_holds({wab, wac, wbc, sa, sb, sc}, cmp))
            out.push_back({ab, 0});
        else if (triangle_zero_holds({wac, wab, wbc, sa, sc, sb}, cmp))
            out.push_back({ac, 0});
        else if (triangle_zero_holds({wbc, wab, wac, sb, sc, sa}, cmp))
            out.push_back({bc, 0});
    });
    return out;
}

inline std::vector<EdgeFixing> rule_triangle_one(const WeightedGraph& g, std::int32_t degree_cap = 512) {
    const WeightCompare cmp{g.all_integral()};
    std::vector<EdgeFixing> out;
    for_each_triangle(g, degree_cap, [&](VertexId a, VertexId b, VertexId c, EdgeId ab, EdgeId ac, EdgeId bc) {
        const double sa = g.abs_incident_weight(a), sb = g.abs_incident_weight(b), sc = g.abs_incident_weight(c);
        const double wab = g.weight(ab), wac = g.weight(ac), wbc = g.weight(bc);
        // v1 is the vertex opposite the negative edge; v2 ranges over the other two
        struct Orientation {
            detail::TriangleView view;
            EdgeId edge;
        };
        const Orientation cands[] = {
            {{wab, wac, wbc, sa, sb, sc}, ab},  // v1=a, v2=b
            {{wac, wab, wbc, sa, sc, sb}, ac},  // v1=a, v2=c
            {{wab, wbc, wac, sb, sa, sc}, ab},  // v1=b, v2=a
            {{wbc, wab, wac, sb, sc, sa}, bc},  // v1=b, v2=c
            {{wac, wbc, wab, sc, sa, sb}, ac},  // v1=c, v2=a
            {{wbc, wac, wab, sc, sb, sa}, bc},  // v1=c, v2=b
        };
        for (const auto& o : cands) {
            if (triangle_one_holds(o.view, cmp)) {
                out.push_back({o.edge, 1});
                break;
            }
        }
    });
    return out;
}

namespace detail {

/// Checks the proportional-neighborhood condition for a concrete pair.
inline std::optional<VertexMerge> verify_symmetric_pair(const WeightedGraph& g, VertexId u, VertexId v) {
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::vector<Arc> au, av;
    double w_uv = 0.0;
    bool adjacent = false;
    for (const auto& a : nu) {
        if (a.head == v) {
            adjacent = true;
            w_uv = a.weight;
        } else {
            au.push_back(a);
        }
    }
    for (const auto& a : nv)
        if (a.head != u) av.push_back(a);
    if (au.size() != av.size()) return std::nullopt;
    if (au.empty()) {
        if (!adjacent) return std::nullopt;
        return VertexMerge{u, v, w_uv > 0};
    }
    const bool integral = g.all_integral();
    const double pu = au[0].weight;
    const double pv = av[0].weight;
    for (std::size_t i = 0; i < au.size(); ++i) {
        if (au[i].head != av[i].head) return std::nullopt;
        // w_u(z) = alpha * w_v(z) with alpha = pu / pv, compared cross-multiplied
        const double lhs = au[i].weight * pv;
        const double rhs = av[i].weight * pu;
        if (integral) {
            if (lhs != rhs) return std::nullopt;
        } else if (std::abs(lhs - rhs) > 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)})) {
            return std::nullopt;
        }
    }
    const bool alpha_positive = (pu > 0) == (pv > 0);
    if (alpha_positive) {
        if (adjacent && !(w_uv < 0)) return std::nullopt;
        return VertexMerge{u, v, false};
    }
    if (adjacent && !(w_uv > 0)) return std::nullopt;
    return VertexMerge{u, v, true};
}

inline std::uint64_t mix_hash(std::uint64_t h, std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace detail

/// Pairs u, v with N(u)\{v} = N(v)\{u} and proportional weights. Candidates
/// are bucketed by a hash of the open neighborhood with weights normalized
/// by the first neighbor's weight (non-adjacent pairs) and by the closed
/// neighborhood (adjacent pairs); every reported pair is verified exactly.
inline std::vector<VertexMerge> rule_symmetry_merge(const WeightedGraph& g) {
    const VertexId n = g.vertex_count();
    std::unordered_map<std::uint64_t, std::vector<VertexId>> open_buckets, closed_buckets;
    for (VertexId v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        if (nb.empty()) continue;
        std::uint64_t ho = 0x12345;
        const double first = nb[0].weight;
        for (const auto& a : nb) {
            const double ratio = a.weight / first;
            ho = detail::mix_hash(ho, static_cast<std::uint64_t>(a.head));
            ho = detail::mix_hash(ho, static_cast<std::uint64_t>(std::llround(ratio * 1e6)));
        }
        open_buckets[ho].push_back(v);
        // closed neighborhood: ids only, inserted in sorted position
        std::uint64_t hc = 0x54321;
        bool self_done = false;
        for (const auto& a : nb) {
            if (!self_done && v < a.head) {
                hc = detail::mix_hash(hc, static_cast<std::uint64_t>(v));
                self_done = true;
            }
            hc = detail::mix_hash(hc, static_cast<std::uint64_t>(a.head));
        }
        if (!self_done) hc = detail::mix_hash(hc, static_cast<std::uint64_t>(v));
        closed_buckets[hc].push_back(v);
    }
    std::vector<VertexMerge> out;
    auto scan = [&](auto& buckets, bool want_adjacent) {
        // deterministic order: by smallest member
        std::vector<const std::vector<VertexId>*> lists;
        for (const auto& [k, members] : buckets)
            if (members.size() > 1) lists.push_back(&members);
        std::sort(lists.begin(), lists.end(), [](auto* a, auto* b) { return a->front() < b->front(); });
        for (const auto* members : lists) {
            std::vector<std::uint8_t> used(members->size(), 0);
            for (std::size_t i = 0; i < members->size(); ++i) {
                if (used[i]) continue;
                for (std::size_t j = i + 1; j < members->size(); ++j) {
                    if (used[j]) continue;
                    const VertexId u = (*members)[i], v = (*members)[j];
                    if ((g.find_edge(u, v) != kNoEdge) != want_adjacent) continue;
                    if (auto m = detail::verify_symmetric_pair(g, u, v)) {
                        out.push_back(*m);
                        used[i] = used[j] = 1;
                        break;
                    }
                }
            }
        }
    };
    scan(open_buckets, false);
    scan(closed_buckets, true);
    return out;
}

struct PresolveOptions {
    int max_rounds = 10;
    std::int32_t triangle_degree_cap = 512;
};

struct PresolveStats {
    int rounds = 0;
    std::int64_t edges_contracted = 0;
    std::int64_t vertices_merged = 0;
    std::int64_t dominating_edge_hits = 0;
    std::int64_t triangle_zero_hits = 0;
    std::int64_t triangle_one_hits = 0;
    std::int64_t symmetry_hits = 0;
    double elapsed_s = 0.0;
};

struct PresolveResult {
    WeightedGraph graph;
    ReductionTrace trace;
    PresolveStats stats;
};

namespace detail {

/// Greedy batch builder: accepts a request only if none of the vertices its
/// rule inspected has been touched in this batch.
class BatchBuilder {
 public:
    explicit BatchBuilder(const WeightedGraph& g) : g_(g), dirty_(g.vertex_count(), 0) {}

    bool clean(std::initializer_list<VertexId> vs) const {
        for (VertexId v : vs)
            if (dirty_[v]) return false;
        return true;
    }

    void add(VertexId u, VertexId v, ContractMode mode) {
        requests_.push_back({u, v, mode});
        const VertexId absorbed = std::max(u, v);
        dirty_[u] = dirty_[v] = 1;
        for (const auto& a : g_.neighbors(absorbed)) dirty_[a.head] = 1;
    }

    std::span<const ContractRequest> requests() const { return requests_; }

 private:
    const WeightedGraph& g_;
    std::vector<std::uint8_t> dirty_;
    std::vector<ContractRequest> requests_;
};

}  // namespace detail

/// Runs the reduction rules in rounds (dominating edge, triangle zero,
/// triangle one, symmetry) until a round contracts nothing or max_rounds is
/// reached. Zero-weight edges vanish with every rebuild.
inline PresolveResult presolve_loop(const WeightedGraph& input, const PresolveOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    PresolveResult res{input, {}, {}};
    for (int round = 0; round < std::max(1, opt.max_rounds); ++round) {
        ++res.stats.rounds;
        std::int64_t contracted_this_round = 0;
        auto apply = [&](detail::BatchBuilder& batch, std::int64_t& hits) {
            if (batch.requests().empty()) return;
            const auto edges_before = res.graph.edge_count();
            const auto records_before = res.trace.records.size();
            res.graph = contract_pairs(res.graph, batch.requests(), res.trace);
            hits += static_cast<std::int64_t>(batch.requests().size());
            res.stats.edges_contracted += edges_before - res.graph.edge_count();
            res.stats.vertices_merged += static_cast<std::int64_t>(res.trace.records.size() - records_before);
            contracted_this_round += static_cast<std::int64_t>(batch.requests().size());
        };

        {
            const auto& g = res.graph;
            detail::BatchBuilder batch(g);
            for (const auto& f : rule_dominating_edge(g)) {
                const auto& e = g.edge(f.edge);
                if (!batch.clean({e.u, e.v})) continue;
                batch.add(e.u, e.v, f.value ? ContractMode::opposite_side : ContractMode::same_side);
            }
            apply(batch, res.stats.dominating_edge_hits);
        }
        for (int which = 0; which < 2; ++which) {
            const auto& g = res.graph;
            detail::BatchBuilder batch(g);
            const auto fixes = which == 0 ? rule_triangle_zero(g, opt.triangle_degree_cap)
                                          : rule_triangle_one(g, opt.triangle_degree_cap);
            for (const auto& f : fixes) {
                const auto& e = g.edge(f.edge);
                // the test inspected the whole triangle; any common neighbor qualifies as v3
                bool ok = batch.clean({e.u, e.v});
                if (ok) {
                    for (const auto& a : g.neighbors(e.u)) {
                        if (g.find_edge(e.v, a.head) != kNoEdge && !batch.clean({a.head})) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) continue;
                batch.add(e.u, e.v, f.value ? ContractMode::opposite_side : ContractMode::same_side);
            }
            apply(batch, which == 0 ? res.stats.triangle_zero_hits : res.stats.triangle_one_hits);
        }
        {
            const auto& g = res.graph;
            detail::BatchBuilder batch(g);
            for (const auto& m : rule_symmetry_merge(g)) {
                if (!batch.clean({m.u, m.v})) continue;
                batch.add(m.u, m.v, m.opposite ? ContractMode::opposite_side : ContractMode::same_side);
            }
            apply(batch, res.stats.symmetry_hits);
        }
        if (contracted_this_round == 0) break;
    }
    res.stats.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace mcbc
