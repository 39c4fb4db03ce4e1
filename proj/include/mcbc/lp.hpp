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

/// \file lp.hpp
/// \brief Edge-variable LP relaxation of MaxCut with odd-cycle rows.
///
/// Variables x_e in [0, 1] per edge, objective max w^T x. A cycle cut (C, F)
/// with |F| odd reads
///     sum_{e in F} x_e - sum_{e in C \ F} x_e <= |F| - 1.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/graph.hpp"
#include "mcbc/simplex.hpp"

namespace mcbc {

struct CycleCut {
    std::vector<EdgeId> edges;
    std::vector<std::uint8_t> in_f;  // parallel to edges

    std::int32_t f_size() const {
        return static_cast<std::int32_t>(std::count(in_f.begin(), in_f.end(), std::uint8_t{1}));
    }
    double rhs() const { return static_cast<double>(f_size() - 1); }

    double lhs(std::span<const double> x) const {
        double s = 0.0;
        for (std::size_t k = 0; k < edges.size(); ++k) s += in_f[k] ? x[edges[k]] : -x[edges[k]];
        return s;
    }
    double violation(std::span<const double> x) const { return lhs(x) - rhs(); }

    /// Sorted (edge, flag) pairs; identical for equal cuts.
    std::vector<std::pair<EdgeId, std::uint8_t>> key() const {
        std::vector<std::pair<EdgeId, std::uint8_t>> k;
        k.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) k.emplace_back(edges[i], in_f[i]);
        std::sort(k.begin(), k.end());
        return k;
    }

    SparseRow row() const {
        SparseRow r;
        r.index.assign(edges.begin(), edges.end());
        for (auto f : in_f) r.value.push_back(f ? 1.0 : -1.0);
        r.rhs = rhs();
        return r;
    }
};

inline void validate_cut(const CycleCut& c) {
    if (c.edges.empty() || c.edges.size() != c.in_f.size())
        throw std::invalid_argument("cycle cut needs matching edge and flag lists");
    if (c.f_size() % 2 == 0) throw std::invalid_argument("cycle cut requires |F| odd");
}

class CutPool {
 public:
    explicit CutPool(int age_limit = 10) : age_limit_(age_limit) {}

    /// False if an identical cut is already present.
    bool insert(CycleCut c) {
        validate_cut(c);
        if (!keys_.insert(c.key()).second) return false;
        cuts_.push_back(std::move(c));
        age_.push_back(0);
        return true;
    }
    bool contains(const CycleCut& c) const { return keys_.count(c.key()) != 0; }

    std::size_t size() const { return cuts_.size(); }
    const CycleCut& operator[](std::size_t i) const { return cuts_[i]; }
    const std::vector<CycleCut>& cuts() const { return cuts_; }
    int age(std::size_t i) const { return age_[i]; }
    int age_limit() const { return age_limit_; }

    /// Ages non-binding cuts, resets binding ones; returns indices whose age
    /// reached the limit. `slack[i]` is the row slack of cut i.
    std::vector<std::int32_t> age_and_collect(std::span<const double> slack, std::span<const std::uint8_t> removable,
                                              double binding_tol) {
        std::vector<std::int32_t> expired;
        for (std::size_t i = 0; i < cuts_.size(); ++i) {
            if (slack[i] > binding_tol) {
                if (++age_[i] >= age_limit_ && removable[i]) expired.push_back(static_cast<std::int32_t>(i));
            } else {
                age_[i] = 0;
            }
        }
        return expired;
    }

    void erase(const std::vector<std::int32_t>& sorted_indices) {
        std::size_t k = 0;
        std::size_t out = 0;
        for (std::size_t i = 0; i < cuts_.size(); ++i) {
            if (k < sorted_indices.size() && sorted_indices[k] == static_cast<std::int32_t>(i)) {
                keys_.erase(cuts_[i].key());
                ++k;
                continue;
            }
            if (out != i) {
                cuts_[out] = std::move(cuts_[i]);
                age_[out] = age_[i];
            }
            ++out;
        }
        cuts_.resize(out);
        age_.resize(out);
    }

 private:
    int age_limit_;
    std::vector<CycleCut> cuts_;
    std::vector<int> age_;
    std::set<std::vector<std::pair<EdgeId, std::uint8_t>>> keys_;
};

struct LpOptions {
    double violation_tol = 1e-5;
    double purge_slack_tol = 1e-7;
    int age_limit = 10;
    SimplexOptions simplex;
};

struct LpState {
    LpStatus status = LpStatus::optimal;
    std::vector<double> x;  // per edge
    /// Valid upper bound on w^T x over the node's feasible set.
    double objective = 0.0;
    double primal_objective = 0.0;
    /// Max-sense reduced costs d_e = w_e - pi^T a_e (pi clipped at 0).
    std::vector<double> reduced_costs;
    std::vector<VarStatus> var_status;
    std::vector<double> lower, upper;  // bounds the LP was solved under
    std::int64_t iterations = 0;

    bool optimal() const { return status == LpStatus::optimal; }
};

class LpRelaxation {
 public:
    explicit LpRelaxation(const WeightedGraph& g, LpOptions opt = {})
        : opt_(opt), pool_(opt.age_limit), lp_(costs(g), std::vector<double>(g.edge_count(), 0.0),
                                               std::vector<double>(g.edge_count(), 1.0), opt.simplex) {}

    const CutPool& pool() const { return pool_; }
    std::int32_t num_edges() const { return lp_.num_structural(); }
    const LpOptions& options() const { return opt_; }

    /// Adds cuts (deduplicated). With a non-empty `x`, only cuts violated by
    /// more than the tolerance are added. Returns the number added.
    std::size_t add_cuts(std::span<const CycleCut> cuts, std::span<const double> x = {}) {
        std::vector<SparseRow> rows;
        for (const auto& c : cuts) {
            validate_cut(c);
            if (!x.empty() && c.violation(x) <= opt_.violation_tol) continue;
            if (!pool_.insert(c)) continue;
            rows.push_back(c.row());
        }
        const std::size_t added = rows.size();
        lp_.add_rows(std::move(rows));
        return added;
    }

    /// Ages cuts against the last solve and drops expired non-binding rows.
    std::size_t purge_cuts() {
        const std::size_t m = pool_.size();
        std::vector<double> slack(m);
        std::vector<std::uint8_t> removable(m);
        for (std::size_t i = 0; i < m; ++i) {
            slack[i] = lp_.slack(static_cast<std::int32_t>(i));
            removable[i] = lp_.slack_status(static_cast<std::int32_t>(i)) == VarStatus::basic;
        }
        auto expired = pool_.age_and_collect(slack, removable, opt_.purge_slack_tol);
        if (expired.empty()) return 0;
        pool_.erase(expired);
        lp_.remove_rows(expired);
        return expired.size();
    }

    /// Solves under per-edge bounds (empty spans keep the current bounds).
    LpState solve(std::span<const double> lower = {}, std::span<const double> upper = {}) {
        if (!lower.empty())
            for (std::int32_t e = 0; e < lp_.num_structural(); ++e) lp_.set_bounds(e, lower[e], upper[e]);
        auto st = lp_.solve();
        if (st == LpStatus::numerical_failure || st == LpStatus::iteration_limit) {
            lp_.reset_basis();
            st = lp_.solve();
        }
        LpState s;
        s.status = st;
        const auto vals = lp_.values();
        s.x.assign(vals.begin(), vals.end());
        for (auto& v : s.x) v = std::clamp(v, 0.0, 1.0);
        s.objective = lp_.dual_bound();
        s.primal_objective = lp_.primal_objective();
        const auto rc = lp_.reduced_costs();
        s.reduced_costs.assign(rc.begin(), rc.end());
        s.var_status.resize(lp_.num_structural());
        s.lower.resize(lp_.num_structural());
        s.upper.resize(lp_.num_structural());
        for (std::int32_t e = 0; e < lp_.num_structural(); ++e) {
            s.var_status[e] = lp_.status(e);
            s.lower[e] = lp_.lower(e);
            s.upper[e] = lp_.upper(e);
        }
        s.iterations = lp_.iterations();
        return s;
    }

    void reset_basis() { lp_.reset_basis(); }

 private:
    static std::vector<double> costs(const WeightedGraph& g) {
        std::vector<double> c(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) c[e] = g.weight(e);
        return c;
    }

    LpOptions opt_;
    CutPool pool_;
    DualSimplex lp_;
};

}  // namespace mcbc
