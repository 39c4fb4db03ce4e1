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

/// \file transform.hpp
/// \brief QUBO <-> MaxCut reductions.
///
/// Both directions satisfy, for every binary assignment,
///     original objective = constant_offset - transformed objective,
/// where the MaxCut assignment puts the root (pinned) vertex on side 0 and
/// vertex i+1 on side x_i.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/instance_io.hpp"

namespace mcbc {

enum class TransformDirection { qubo_to_mc, mc_to_qubo };

struct TransformCertificate {
    TransformDirection direction = TransformDirection::qubo_to_mc;
    double constant_offset = 0.0;
    /// 0-based id of the pinned vertex (the extra root for qubo_to_mc).
    VertexId root_vertex = 0;
};

/// The symmetric part S = (Q + Q^T)/2 as a map over i <= j (0-based).
inline std::map<std::pair<VertexId, VertexId>, double> symmetric_part(const RawQuboInstance& q) {
    std::map<std::pair<VertexId, VertexId>, double> s;
    for (const auto& e : q.entries) {
        const VertexId i = e.i - 1;
        const VertexId j = e.j - 1;
        if (i == j)
            s[{i, i}] += e.q;
        else
            s[std::minmax(i, j)] += 0.5 * e.q;
    }
    return s;
}

/// Vertex 1 (0-based 0) is the root; variable i becomes vertex i+2 (1-based).
/// Edge weights: w(root, i) = -(S_ii + sum_{j != i} S_ij), w(i, j) = S_ij.
inline std::pair<RawMaxCutInstance, TransformCertificate> qubo_to_maxcut(const RawQuboInstance& q) {
    const auto s = symmetric_part(q);
    std::vector<double> linear(q.dimension, 0.0);
    RawMaxCutInstance mc;
    mc.num_vertices = q.dimension + 1;
    for (const auto& [key, val] : s) {
        const auto [i, j] = key;
        if (i == j) {
            linear[i] += val;
        } else {
            linear[i] += val;
            linear[j] += val;
        }
    }
    for (VertexId i = 0; i < q.dimension; ++i)
        if (linear[i] != 0.0) mc.edges.push_back({1, i + 2, -linear[i]});
    for (const auto& [key, val] : s) {
        const auto [i, j] = key;
        if (i != j && val != 0.0) mc.edges.push_back({i + 2, j + 2, val});
    }
    for (const auto& e : mc.edges) mc.all_integral = mc.all_integral && is_integral_value(e.w);
    return {std::move(mc), TransformCertificate{TransformDirection::qubo_to_mc, 0.0, 0}};
}

/// Vertex 1 (0-based 0) is pinned to side 0; vertex k+1 becomes variable k.
/// Q_kk = -sum of incident weights, Q_kl = 2 w(k, l) stored once (k < l).
inline std::pair<RawQuboInstance, TransformCertificate> maxcut_to_qubo(const RawMaxCutInstance& g) {
    RawQuboInstance q;
    q.dimension = std::max<VertexId>(g.num_vertices - 1, 1);
    std::map<std::pair<VertexId, VertexId>, double> coeff;  // 0-based vertex ids
    for (const auto& e : g.edges) {
        const VertexId a = e.u - 1;
        const VertexId b = e.v - 1;
        if (a != 0) coeff[{a, a}] -= e.w;
        if (b != 0) coeff[{b, b}] -= e.w;
        if (a != 0 && b != 0) coeff[std::minmax(a, b)] += 2.0 * e.w;
    }
    for (const auto& [key, val] : coeff)
        if (val != 0.0) q.entries.push_back({key.first, key.second, val});
    return {std::move(q), TransformCertificate{TransformDirection::mc_to_qubo, 0.0, 0}};
}

/// x^T Q x for a 0/1 vector x (0-based).
inline double qubo_objective(const RawQuboInstance& q, std::span<const std::uint8_t> x) {
    double f = 0.0;
    for (const auto& e : q.entries)
        if (x[e.i - 1] && x[e.j - 1]) f += e.q;
    return f;
}

/// MaxCut side vector for a QUBO assignment (root on side 0).
inline Assignment qubo_to_sides(std::span<const std::uint8_t> x) {
    Assignment y(x.size() + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) y[i + 1] = x[i];
    return y;
}

/// QUBO assignment for a MaxCut side vector, normalized so the root is on side 0.
inline Assignment sides_to_qubo(std::span<const std::uint8_t> y, VertexId root = 0) {
    Assignment x;
    x.reserve(y.size() - 1);
    for (std::size_t v = 0; v < y.size(); ++v)
        if (static_cast<VertexId>(v) != root) x.push_back(y[v] ^ y[root]);
    return x;
}

}  // namespace mcbc
