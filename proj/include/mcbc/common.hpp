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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcbc {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Vertex side of a bipartition; stored as 0/1 bytes in assignments.
using Assignment = std::vector<std::uint8_t>;

/// Comparison helper used by reductions: exact for integral data, otherwise
/// accepts `lhs >= rhs` up to a relative slack of 1e-9.
struct WeightCompare {
    bool integral = false;

    bool geq(double lhs, double rhs) const {
        if (integral) return lhs >= rhs;
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        return lhs >= rhs - 1e-9 * scale;
    }
    /// Strict counterpart; non-integral data needs a relative margin of 1e-9.
    bool gt(double lhs, double rhs) const {
        if (integral) return lhs > rhs;
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        return lhs > rhs + 1e-9 * scale;
    }
};

inline bool is_integral_value(double w) { return std::nearbyint(w) == w; }

/// Weights whose magnitude falls below this after summation are treated as zero.
inline constexpr double kZeroWeight = 1e-12;

/// Minimal disjoint-set forest with parity, used wherever vertex sides are
/// derived from fixed edges (parity 1 = opposite sides).
class ParityUnionFind {
 public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }

    /// Returns (root, parity of v relative to root).
    std::pair<VertexId, std::uint8_t> find(VertexId v) {
        std::uint8_t par = 0;
        VertexId r = v;
        while (parent_[r] != r) {
            par ^= parity_[r];
            r = parent_[r];
        }
        // path compression with parity fix-up
        std::uint8_t acc = par;
        VertexId cur = v;
        while (parent_[cur] != cur) {
            const VertexId next = parent_[cur];
            const std::uint8_t old = parity_[cur];
            parent_[cur] = r;
            parity_[cur] = acc;
            acc ^= old;
            cur = next;
        }
        return {r, par};
    }

    /// Joins u and v with relative parity `odd`. Returns false on contradiction.
    bool unite(VertexId u, VertexId v, std::uint8_t odd) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) return static_cast<std::uint8_t>(pu ^ pv) == odd;
        if (rank_[ru] < rank_[rv]) std::swap(ru, rv);
        parent_[rv] = ru;
        parity_[rv] = static_cast<std::uint8_t>(pu ^ pv ^ odd);
        if (rank_[ru] == rank_[rv]) ++rank_[ru];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

 private:
    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::uint8_t> rank_;
};

}  // namespace mcbc
