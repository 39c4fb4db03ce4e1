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

/// \file propagate.hpp
/// \brief Reduced-cost fixing of edge variables and of vertex sides relative
/// to already fixed parts of the graph.
///
/// Conditions are stated with the minimization-sense reduced cost
/// w~(e) = -d(e), where d(e) is the LP's reduced cost for max w^T x.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/graph.hpp"
#include "mcbc/lp.hpp"

namespace mcbc {

struct EdgeFix {
    EdgeId edge;
    std::uint8_t value;

    bool operator==(const EdgeFix&) const = default;
};

/// Sides of the vertices touched by fixed edges, relative to the lowest
/// vertex of each fixed-edge component (which gets side 0).
struct PartialAssignment {
    std::vector<std::int32_t> component;  // -1: unassigned
    std::vector<std::uint8_t> side;
    bool infeasible = false;

    bool assigned(VertexId v) const { return component[v] >= 0; }
};

inline PartialAssignment rebuild_partial_assignment(const WeightedGraph& g, std::span<const double> lower,
                                                    std::span<const double> upper) {
    const VertexId n = g.vertex_count();
    PartialAssignment pa;
    pa.component.assign(n, -1);
    pa.side.assign(n, 0);
    ParityUnionFind uf(n);
    std::vector<std::uint8_t> touched(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (lower[e] != upper[e]) continue;
        const auto& ed = g.edge(e);
        touched[ed.u] = touched[ed.v] = 1;
        if (!uf.unite(ed.u, ed.v, lower[e] > 0.5 ? 1 : 0)) pa.infeasible = true;
    }
    // vertices are visited in increasing id, so the first one seen anchors
    std::vector<std::int32_t> comp_of_root(n, -1);
    std::vector<std::uint8_t> anchor_parity(n, 0);
    std::int32_t next = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!touched[v]) continue;
        const auto [r, p] = uf.find(v);
        if (comp_of_root[r] < 0) {
            comp_of_root[r] = next++;
            anchor_parity[r] = p;
        }
        pa.component[v] = comp_of_root[r];
        pa.side[v] = p ^ anchor_parity[r];
    }
    return pa;
}

namespace detail {
inline double fix_tolerance(double incumbent) { return 1e-9 * std::max(1.0, std::abs(incumbent)); }
}  // namespace detail

/// Fixes nonbasic edges whose move to the other bound would push the bound
/// below the incumbent value L.
inline std::vector<EdgeFix> reduced_cost_fix(const LpState& lp, double incumbent) {
    std::vector<EdgeFix> out;
    const double tol = detail::fix_tolerance(incumbent);
    for (EdgeId e = 0; e < static_cast<EdgeId>(lp.x.size()); ++e) {
        if (lp.lower[e] == lp.upper[e]) continue;
        const double wt = -lp.reduced_costs[e];
        if (lp.var_status[e] == VarStatus::at_lower) {
            if (lp.objective - wt < incumbent - tol) out.push_back({e, 0});
        } else if (lp.var_status[e] == VarStatus::at_upper) {
            if (lp.objective + wt < incumbent - tol) out.push_back({e, 1});
        }
    }
    return out;
}

struct ImplicationResult {
    std::vector<EdgeFix> fixes;
    bool prune = false;
};

/// For every unassigned vertex u and every fixed-edge component K adjacent to
/// it: Delta0 (Delta1) sums w~ over edges from u to K's side-0 (side-1)
/// vertices. L + Delta0 > U puts u on K's side 0, L + Delta1 > U on side 1;
/// the decision is expressed as fixings of all edges between u and K.
inline ImplicationResult implication_fix(const LpState& lp, double incumbent, const PartialAssignment& pa,
                                         const WeightedGraph& g) {
    ImplicationResult res;
    const double tol = detail::fix_tolerance(incumbent);
    struct Acc {
        std::int32_t comp;
        double delta[2];
    };
    std::vector<Acc> acc;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (pa.assigned(u)) continue;
        acc.clear();
        for (const auto& a : g.neighbors(u)) {
            if (!pa.assigned(a.head)) continue;
            const auto k = pa.component[a.head];
            auto it = std::find_if(acc.begin(), acc.end(), [&](const Acc& x) { return x.comp == k; });
            if (it == acc.end()) {
                acc.push_back({k, {0.0, 0.0}});
                it = acc.end() - 1;
            }
            it->delta[pa.side[a.head]] += -lp.reduced_costs[a.edge];
        }
        for (const auto& c : acc) {
            const bool to0 = incumbent + c.delta[0] > lp.objective + tol;
            const bool to1 = incumbent + c.delta[1] > lp.objective + tol;
            if (to0 && to1) {
                res.prune = true;
                return res;
            }
            if (!to0 && !to1) continue;
            const std::uint8_t s = to0 ? 0 : 1;
            for (const auto& a : g.neighbors(u))
                if (pa.component[a.head] == c.comp)
                    res.fixes.push_back({a.edge, static_cast<std::uint8_t>(pa.side[a.head] != s)});
        }
    }
    return res;
}

}  // namespace mcbc
