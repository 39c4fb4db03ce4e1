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

/// \file heuristics.hpp
/// \brief Primal heuristics: rank-2 angular relaxation, Kernighan-Lin local
/// search and spanning-tree rounding of LP points.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/graph.hpp"

namespace mcbc {

struct CutSolution {
    Assignment sides;
    double weight = 0.0;
};

struct HeuristicOptions {
    int restarts = 8;
    double perturbation = std::numbers::pi / 10.0;
    int max_sweeps = 300;
    double angle_tol = 1e-4;
};

/// Flip gains: cut(y with v flipped) - cut(y).
inline std::vector<double> flip_gains(const WeightedGraph& g, std::span<const std::uint8_t> y) {
    std::vector<double> gain(g.vertex_count(), 0.0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (const auto& a : g.neighbors(v)) gain[v] += y[v] == y[a.head] ? a.weight : -a.weight;
    return gain;
}

/// Kernighan-Lin passes until a pass brings no improvement.
inline CutSolution kernighan_lin(const WeightedGraph& g, Assignment y) {
    const VertexId n = g.vertex_count();
    const double eps = 1e-12 * (1.0 + g.abs_total_weight());
    for (int pass = 0; pass < 1000 && n > 0; ++pass) {
        auto gain = flip_gains(g, y);
        std::vector<std::uint32_t> version(n, 0);
        std::vector<std::uint8_t> locked(n, 0);
        std::priority_queue<std::tuple<double, VertexId, std::uint32_t>> heap;  // (gain, -v, version)
        for (VertexId v = 0; v < n; ++v) heap.emplace(gain[v], -v, 0U);
        std::vector<VertexId> order;
        double run = 0.0, best = 0.0;
        std::size_t best_len = 0;
        while (!heap.empty()) {
            const auto [gv, negv, ver] = heap.top();
            heap.pop();
            const VertexId v = -negv;
            if (locked[v] || ver != version[v]) continue;
            locked[v] = 1;
            y[v] ^= 1U;
            run += gv;
            order.push_back(v);
            if (run > best + eps) {
                best = run;
                best_len = order.size();
            }
            gain[v] = -gain[v];
            for (const auto& a : g.neighbors(v)) {
                const VertexId u = a.head;
                gain[u] += y[u] == y[v] ? 2.0 * a.weight : -2.0 * a.weight;
                if (!locked[u]) heap.emplace(gain[u], -u, ++version[u]);
            }
        }
        for (std::size_t i = order.size(); i-- > best_len;) y[order[i]] ^= 1U;
        if (best_len == 0) break;
    }
    const double w = cut_weight(g, y);
    return {std::move(y), w};
}

namespace detail {

/// Best cut among the |V| diameters through the sorted angles.
inline CutSolution cut_from_angles(const WeightedGraph& g, std::span<const double> theta) {
    const VertexId n = g.vertex_count();
    std::vector<double> phase(n);
    Assignment y(n);
    for (VertexId v = 0; v < n; ++v) {
        const double t = std::fmod(std::fmod(theta[v], 2 * std::numbers::pi) + 2 * std::numbers::pi,
                                   2 * std::numbers::pi);
        y[v] = t < std::numbers::pi ? 1 : 0;
        phase[v] = std::fmod(t, std::numbers::pi);
    }
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return phase[a] < phase[b]; });
    auto gain = flip_gains(g, y);
    double cur = cut_weight(g, y);
    double best = cur;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const VertexId v = order[i];
        cur += gain[v];
        y[v] ^= 1U;
        gain[v] = -gain[v];
        for (const auto& a : g.neighbors(v)) gain[a.head] += y[a.head] == y[v] ? 2.0 * a.weight : -2.0 * a.weight;
        if (cur > best) {
            best = cur;
            best_len = i + 1;
        }
    }
    // after all flips y is the complement of the start; undo the tail
    for (std::size_t i = order.size(); i-- > best_len;) y[order[i]] ^= 1U;
    return {y, cut_weight(g, y)};
}

inline void minimize_angles(const WeightedGraph& g, std::vector<double>& theta, const HeuristicOptions& opt) {
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        double moved = 0.0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            double a = 0.0, b = 0.0;
            for (const auto& arc : g.neighbors(v)) {
                a += arc.weight * std::cos(theta[arc.head]);
                b += arc.weight * std::sin(theta[arc.head]);
            }
            if (a == 0.0 && b == 0.0) continue;
            const double next = std::atan2(b, a) + std::numbers::pi;
            double diff = std::abs(std::remainder(next - theta[v], 2 * std::numbers::pi));
            moved = std::max(moved, diff);
            theta[v] = next;
        }
        if (moved < opt.angle_tol) break;
    }
}

}  // namespace detail

/// Angular energy sum_{uv} w cos(theta_u - theta_v).
inline double angular_energy(const WeightedGraph& g, std::span<const double> theta) {
    double s = 0.0;
    for (const auto& e : g.edges()) s += e.weight * std::cos(theta[e.u] - theta[e.v]);
    return s;
}

/// Rank-2 angular heuristic with restarts; every candidate is polished by
/// Kernighan-Lin. A warm start is never worsened.
inline CutSolution burer_rank2(const WeightedGraph& g, std::uint64_t seed, const CutSolution* init = nullptr,
                               const HeuristicOptions& opt = {}) {
    const VertexId n = g.vertex_count();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> noise(-opt.perturbation, opt.perturbation);
    CutSolution best;
    std::vector<double> theta(n);
    if (init != nullptr) {
        best = kernighan_lin(g, init->sides);
        for (VertexId v = 0; v < n; ++v) theta[v] = init->sides[v] ? std::numbers::pi : 0.0;
        // break the exact symmetry so the coordinate updates can move
        for (auto& t : theta) t += 0.1 * noise(rng);
    } else {
        for (auto& t : theta) t = angle(rng);
        best.sides.assign(n, 0);
        best.weight = 0.0;
    }
    std::vector<double> best_theta = theta;
    for (int round = 0; round <= opt.restarts; ++round) {
        if (round > 0) {
            theta = best_theta;
            for (auto& t : theta) t += noise(rng);
        }
        detail::minimize_angles(g, theta, opt);
        auto cand = kernighan_lin(g, detail::cut_from_angles(g, theta).sides);
        if (cand.weight > best.weight || best.sides.size() != static_cast<std::size_t>(n)) {
            best = std::move(cand);
            best_theta = theta;
        }
    }
    best.weight = cut_weight(g, best.sides);
    return best;
}

/// Rounds an LP point along a maximum-confidence spanning forest, then
/// applies Kernighan-Lin.
inline CutSolution spanning_tree_rounding(const WeightedGraph& g, std::span<const double> x) {
    const VertexId n = g.vertex_count();
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return std::abs(x[a] - 0.5) > std::abs(x[b] - 0.5); });
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<std::vector<std::pair<VertexId, std::uint8_t>>> tree(n);
    for (const auto e : order) {
        const auto& ed = g.edge(e);
        const auto ru = find(ed.u), rv = find(ed.v);
        if (ru == rv) continue;
        parent[std::max(ru, rv)] = std::min(ru, rv);
        const std::uint8_t flip = x[e] >= 0.5 ? 1 : 0;
        tree[ed.u].emplace_back(ed.v, flip);
        tree[ed.v].emplace_back(ed.u, flip);
    }
    Assignment y(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> queue;
    for (VertexId r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        queue.assign(1, r);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const VertexId v = queue[i];
            for (const auto& [u, flip] : tree[v]) {
                if (seen[u]) continue;
                seen[u] = 1;
                y[u] = y[v] ^ flip;
                queue.push_back(u);
            }
        }
    }
    return kernighan_lin(g, std::move(y));
}

}  // namespace mcbc
