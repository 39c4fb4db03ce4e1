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

/// \file simplex.hpp
/// \brief Bounded-variable dual simplex with a dense explicit basis inverse.
///
/// Solves   max c^T x   s.t.   A x + s = b,  l <= x <= u,  s >= 0
/// where every structural variable is boxed. Because all structurals are
/// boxed, the all-slack basis with each structural at its cost-preferred
/// bound is dual feasible, so no phase 1 is ever needed; rows appended later
/// enter with a basic slack and keep the current basis dual feasible.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace mcbc {

enum class VarStatus : std::uint8_t { basic, at_lower, at_upper };
enum class LpStatus { optimal, infeasible, iteration_limit, numerical_failure };

struct SparseRow {
    std::vector<std::int32_t> index;
    std::vector<double> value;
    double rhs = 0.0;
};

struct SimplexOptions {
    double primal_tol = 1e-9;
    double dual_tol = 1e-9;
    double pivot_tol = 1e-9;
    int bland_after_degenerate = 1000;
    int refactor_every = 100;
    std::int64_t max_iterations = -1;  // < 0: automatic
};

class DualSimplex {
 public:
    DualSimplex(std::vector<double> cost, std::vector<double> lower, std::vector<double> upper,
                SimplexOptions opt = {})
        : n_(static_cast<std::int32_t>(cost.size())),
          cost_(std::move(cost)),
          lower_(std::move(lower)),
          upper_(std::move(upper)),
          opt_(opt),
          cols_(n_) {
        if (lower_.size() != cost_.size() || upper_.size() != cost_.size())
            throw std::invalid_argument("bound vectors must match cost vector");
        status_.assign(n_, VarStatus::at_lower);
        value_.assign(n_, 0.0);
        reset_basis();
    }

    std::int32_t num_structural() const { return n_; }
    std::int32_t num_rows() const { return static_cast<std::int32_t>(rows_.size()); }
    std::int64_t iterations() const { return iterations_; }

    void set_bounds(std::int32_t j, double lo, double up) {
        if (lo > up) throw std::invalid_argument("empty bound interval");
        lower_[j] = lo;
        upper_[j] = up;
        if (status_[j] != VarStatus::basic) place_nonbasic(j);
    }
    double lower(std::int32_t j) const { return lower_[j]; }
    double upper(std::int32_t j) const { return upper_[j]; }

    /// Appends a row with its slack basic.
    void add_row(SparseRow row) {
        std::vector<SparseRow> one;
        one.push_back(std::move(row));
        add_rows(std::move(one));
    }

    /// Appends rows with their slacks basic; B^{-1} grows by
    ///     [[B^{-1}, 0], [-A_new,B B^{-1}, I]].
    void add_rows(std::vector<SparseRow> rows) {
        if (rows.empty()) return;
        const std::int32_t m = num_rows();
        const auto k = static_cast<std::int32_t>(rows.size());
        const std::int32_t mk = m + k;
        for (std::int32_t t = 0; t < k; ++t)
            for (std::size_t e = 0; e < rows[t].index.size(); ++e) {
                const auto j = rows[t].index[e];
                if (j < 0 || j >= n_) throw std::invalid_argument("row references unknown column");
                cols_[j].push_back({m + t, rows[t].value[e]});
            }
        std::vector<double> next(static_cast<std::size_t>(mk) * mk, 0.0);
        for (std::int32_t i = 0; i < m; ++i)
            std::copy_n(&binv_[static_cast<std::size_t>(i) * m], m, &next[static_cast<std::size_t>(i) * mk]);
        for (std::int32_t t = 0; t < k; ++t) {
            double* dst = &next[static_cast<std::size_t>(m + t) * mk];
            for (std::size_t e = 0; e < rows[t].index.size(); ++e) {
                const auto j = rows[t].index[e];
                if (status_[j] != VarStatus::basic) continue;
                const double a = rows[t].value[e];
                const double* src = &binv_[static_cast<std::size_t>(pos_[j]) * m];
                for (std::int32_t c = 0; c < m; ++c) dst[c] -= a * src[c];
            }
            dst[m + t] = 1.0;
        }
        binv_ = std::move(next);
        for (std::int32_t t = 0; t < k; ++t) {
            rows_.push_back(std::move(rows[t]));
            status_.push_back(VarStatus::basic);
            value_.push_back(0.0);
            pos_.push_back(m + t);
            head_.push_back(n_ + m + t);
        }
    }

    /// Removes rows (indices refer to the current numbering). Rows whose
    /// slack is nonbasic force a basis reset.
    void remove_rows(std::vector<std::int32_t> which) {
        if (which.empty()) return;
        std::sort(which.begin(), which.end());
        which.erase(std::unique(which.begin(), which.end()), which.end());
        const std::int32_t m = num_rows();
        std::vector<std::uint8_t> drop(m, 0);
        bool reset = false;
        for (auto r : which) {
            drop[r] = 1;
            if (status_[n_ + r] != VarStatus::basic) reset = true;
        }
        std::vector<std::int32_t> new_index(m, -1);
        std::int32_t next = 0;
        for (std::int32_t r = 0; r < m; ++r)
            if (!drop[r]) new_index[r] = next++;
        std::vector<SparseRow> rows;
        std::vector<VarStatus> status(status_.begin(), status_.begin() + n_);
        std::vector<double> value(value_.begin(), value_.begin() + n_);
        for (std::int32_t r = 0; r < m; ++r) {
            if (drop[r]) continue;
            rows.push_back(std::move(rows_[r]));
            status.push_back(status_[n_ + r]);
            value.push_back(value_[n_ + r]);
        }
        std::vector<std::int32_t> head;
        for (auto h : head_) {
            if (h < n_) {
                head.push_back(h);
            } else if (!drop[h - n_]) {
                head.push_back(n_ + new_index[h - n_]);
            }
        }
        rows_ = std::move(rows);
        status_ = std::move(status);
        value_ = std::move(value);
        rebuild_columns();
        if (reset || static_cast<std::int32_t>(head.size()) != num_rows()) {
            reset_basis();
            return;
        }
        head_ = std::move(head);
        pos_.assign(n_ + num_rows(), -1);
        for (std::int32_t i = 0; i < num_rows(); ++i) pos_[head_[i]] = i;
        if (!refactor()) reset_basis();
    }

    /// All-slack basis; structurals at their cost-preferred bound.
    void reset_basis() {
        const std::int32_t m = num_rows();
        status_.resize(n_ + m);
        value_.resize(n_ + m);
        head_.resize(m);
        pos_.assign(n_ + m, -1);
        for (std::int32_t j = 0; j < n_; ++j) {
            status_[j] = cost_[j] > 0 ? VarStatus::at_upper : VarStatus::at_lower;
            place_nonbasic(j);
        }
        for (std::int32_t i = 0; i < m; ++i) {
            head_[i] = n_ + i;
            pos_[n_ + i] = i;
            status_[n_ + i] = VarStatus::basic;
        }
        binv_.assign(static_cast<std::size_t>(m) * m, 0.0);
        for (std::int32_t i = 0; i < m; ++i) binv_[static_cast<std::size_t>(i) * m + i] = 1.0;
        updates_since_refactor_ = 0;
    }

    LpStatus solve() {
        const std::int32_t m = num_rows();
        const std::int64_t max_iter =
            opt_.max_iterations >= 0 ? opt_.max_iterations : 50LL * (n_ + m) + 10000;
        std::int64_t iter = 0;
        int degenerate_run = 0;
        int cleanup_passes = 0;
        for (std::int32_t j = 0; j < n_; ++j)
            if (status_[j] != VarStatus::basic) place_nonbasic(j);
        compute_duals();
        make_structurals_dual_feasible();
        compute_primal();
        while (true) {
            if (iter >= max_iter) return finish(LpStatus::iteration_limit);
            const bool bland = degenerate_run >= opt_.bland_after_degenerate;
            const std::int32_t r = choose_leaving(bland);
            if (r < 0) {
                // confirm on freshly computed values before declaring optimality
                compute_duals();
                const bool flipped = make_structurals_dual_feasible();
                compute_primal();
                if ((flipped || choose_leaving(false) >= 0) && cleanup_passes++ < 5) continue;
                return finish(LpStatus::optimal);
            }
            const std::int32_t leave = head_[r];
            const bool to_lower = value_[leave] < lower_of(leave);
            const double s = to_lower ? 1.0 : -1.0;

            std::vector<double> rho(binv_.begin() + static_cast<std::ptrdiff_t>(r) * m,
                                    binv_.begin() + static_cast<std::ptrdiff_t>(r + 1) * m);
            compute_pivot_row(rho);
            const std::int32_t q = ratio_test(s, bland);
            if (q < 0) {
                // re-check on refreshed data; drift can fake infeasibility
                if (updates_since_refactor_ > 0 && refactor()) {
                    compute_duals();
                    make_structurals_dual_feasible();
                    compute_primal();
                    continue;
                }
                return finish(LpStatus::infeasible);
            }

            const double theta = std::abs(reduced_[q] / alpha_[q]);
            degenerate_run = theta <= opt_.dual_tol ? degenerate_run + 1 : 0;

            if (!pivot(r, q, to_lower, rho)) {
                if (!refactor()) {
                    reset_basis();
                    if (++failures_ > 3) return finish(LpStatus::numerical_failure);
                }
                compute_duals();
                make_structurals_dual_feasible();
                compute_primal();
                continue;
            }
            ++iter;
            ++iterations_;
            if (++updates_since_refactor_ >= opt_.refactor_every) {
                if (!refactor()) {
                    reset_basis();
                    if (++failures_ > 3) return finish(LpStatus::numerical_failure);
                }
                compute_duals();
                make_structurals_dual_feasible();
                compute_primal();
            }
        }
    }

    std::span<const double> values() const { return {value_.data(), static_cast<std::size_t>(n_)}; }
    double slack(std::int32_t row) const { return value_[n_ + row]; }
    VarStatus status(std::int32_t j) const { return status_[j]; }
    VarStatus slack_status(std::int32_t row) const { return status_[n_ + row]; }

    /// Reduced costs c_j - pi_+^T a_j for structurals, with pi_+ = max(pi, 0).
    std::span<const double> reduced_costs() const { return safe_reduced_; }
    std::span<const double> row_duals() const { return duals_; }

    double primal_objective() const {
        double s = 0.0;
        for (std::int32_t j = 0; j < n_; ++j) s += cost_[j] * value_[j];
        return s;
    }

    /// Lagrangian bound b^T pi_+ + sum_j max(d_j l_j, d_j u_j); valid for any
    /// basis and equal to the optimum at an optimal basis.
    double dual_bound() const { return dual_bound_; }

 private:
    struct ColEntry {
        std::int32_t row;
        double value;
    };

    double lower_of(std::int32_t j) const { return j < n_ ? lower_[j] : 0.0; }
    double upper_of(std::int32_t j) const {
        return j < n_ ? upper_[j] : std::numeric_limits<double>::infinity();
    }

    void place_nonbasic(std::int32_t j) {
        if (lower_[j] == upper_[j]) {
            status_[j] = VarStatus::at_lower;
            value_[j] = lower_[j];
            return;
        }
        value_[j] = status_[j] == VarStatus::at_upper ? upper_[j] : lower_[j];
    }

    void rebuild_columns() {
        cols_.assign(n_, {});
        for (std::int32_t r = 0; r < num_rows(); ++r)
            for (std::size_t k = 0; k < rows_[r].index.size(); ++k)
                cols_[rows_[r].index[k]].push_back({r, rows_[r].value[k]});
    }

    void compute_primal() {
        const std::int32_t m = num_rows();
        std::vector<double> rhs(m);
        for (std::int32_t i = 0; i < m; ++i) {
            double s = rows_[i].rhs;
            const auto& row = rows_[i];
            for (std::size_t k = 0; k < row.index.size(); ++k) {
                const auto j = row.index[k];
                if (status_[j] != VarStatus::basic) s -= row.value[k] * value_[j];
            }
            rhs[i] = s;
        }
        for (std::int32_t i = 0; i < m; ++i) {
            double s = 0.0;
            const double* bi = &binv_[static_cast<std::size_t>(i) * m];
            for (std::int32_t k = 0; k < m; ++k) s += bi[k] * rhs[k];
            value_[head_[i]] = s;
        }
    }

    void compute_duals() {
        const std::int32_t m = num_rows();
        duals_.assign(m, 0.0);
        for (std::int32_t i = 0; i < m; ++i) {
            const double c = head_[i] < n_ ? cost_[head_[i]] : 0.0;
            if (c == 0.0) continue;
            const double* bi = &binv_[static_cast<std::size_t>(i) * m];
            for (std::int32_t k = 0; k < m; ++k) duals_[k] += c * bi[k];
        }
        reduced_.assign(n_ + m, 0.0);
        safe_reduced_.assign(n_, 0.0);
        for (std::int32_t j = 0; j < n_; ++j) {
            double d = cost_[j];
            double ds = cost_[j];
            for (const auto& ce : cols_[j]) {
                d -= duals_[ce.row] * ce.value;
                ds -= std::max(duals_[ce.row], 0.0) * ce.value;
            }
            reduced_[j] = status_[j] == VarStatus::basic ? 0.0 : d;
            safe_reduced_[j] = ds;
        }
        for (std::int32_t i = 0; i < m; ++i)
            reduced_[n_ + i] = status_[n_ + i] == VarStatus::basic ? 0.0 : -duals_[i];
    }

    /// Lagrangian bound from the clipped duals (see dual_bound()).
    void compute_safe_bound() {
        const std::int32_t m = num_rows();
        double bound = 0.0;
        for (std::int32_t i = 0; i < m; ++i) bound += rows_[i].rhs * std::max(duals_[i], 0.0);
        for (std::int32_t j = 0; j < n_; ++j) {
            const double d = safe_reduced_[j];
            bound += d > 0 ? d * upper_[j] : d * lower_[j];
        }
        dual_bound_ = bound;
    }

    /// Flips nonbasic structurals whose reduced cost has the wrong sign.
    /// Returns true if anything moved.
    bool make_structurals_dual_feasible() {
        bool moved = false;
        for (std::int32_t j = 0; j < n_; ++j) {
            if (status_[j] == VarStatus::basic || lower_[j] == upper_[j]) continue;
            const double d = reduced_[j];
            if (status_[j] == VarStatus::at_lower && d > opt_.dual_tol) {
                status_[j] = VarStatus::at_upper;
                value_[j] = upper_[j];
                moved = true;
            } else if (status_[j] == VarStatus::at_upper && d < -opt_.dual_tol) {
                status_[j] = VarStatus::at_lower;
                value_[j] = lower_[j];
                moved = true;
            }
        }
        return moved;
    }

    std::int32_t choose_leaving(bool bland) const {
        std::int32_t best = -1;
        double best_inf = opt_.primal_tol;
        std::int32_t best_var = std::numeric_limits<std::int32_t>::max();
        for (std::int32_t i = 0; i < num_rows(); ++i) {
            const auto v = head_[i];
            const double x = value_[v];
            double inf = 0.0;
            if (x < lower_of(v)) inf = lower_of(v) - x;
            else if (x > upper_of(v)) inf = x - upper_of(v);
            const double scale = 1.0 + std::abs(lower_of(v));
            if (inf <= opt_.primal_tol * scale) continue;
            if (bland) {
                if (v < best_var) {
                    best_var = v;
                    best = i;
                }
            } else if (inf > best_inf) {
                best_inf = inf;
                best = i;
            }
        }
        return best;
    }

    void compute_pivot_row(const std::vector<double>& rho) {
        const std::int32_t m = num_rows();
        alpha_.assign(n_ + m, 0.0);
        for (std::int32_t i = 0; i < m; ++i) {
            if (rho[i] == 0.0) continue;
            const auto& row = rows_[i];
            for (std::size_t k = 0; k < row.index.size(); ++k) alpha_[row.index[k]] += rho[i] * row.value[k];
            alpha_[n_ + i] = rho[i];
        }
    }

    std::int32_t ratio_test(double s, bool bland) const {
        const std::int32_t total = n_ + num_rows();
        auto eligible = [&](std::int32_t j, double& dd) {
            if (status_[j] == VarStatus::basic) return false;
            if (j < n_ && lower_[j] == upper_[j]) return false;
            const double a = alpha_[j] * s;
            if (status_[j] == VarStatus::at_lower) {
                if (a >= -opt_.pivot_tol) return false;
                dd = std::max(0.0, -reduced_[j]);
            } else {
                if (a <= opt_.pivot_tol) return false;
                dd = std::max(0.0, reduced_[j]);
            }
            return true;
        };
        if (bland) {
            std::int32_t best = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::int32_t j = 0; j < total; ++j) {
                double dd = 0.0;
                if (!eligible(j, dd)) continue;
                const double ratio = dd / std::abs(alpha_[j]);
                if (ratio < best_ratio - 1e-12) {
                    best_ratio = ratio;
                    best = j;
                }
            }
            return best;
        }
        // Harris two-pass: bound the step with relaxed tolerances, then take
        // the largest pivot among candidates within the bound.
        double theta_max = std::numeric_limits<double>::infinity();
        for (std::int32_t j = 0; j < total; ++j) {
            double dd = 0.0;
            if (!eligible(j, dd)) continue;
            theta_max = std::min(theta_max, (dd + opt_.dual_tol) / std::abs(alpha_[j]));
        }
        if (!std::isfinite(theta_max)) return -1;
        std::int32_t best = -1;
        double best_abs = 0.0;
        for (std::int32_t j = 0; j < total; ++j) {
            double dd = 0.0;
            if (!eligible(j, dd)) continue;
            const double a = std::abs(alpha_[j]);
            if (dd / a <= theta_max && a > best_abs) {
                best_abs = a;
                best = j;
            }
        }
        return best;
    }

    /// Basis change with incremental update of primal values, reduced costs
    /// and duals; false if the pivot element is numerically unreliable.
    bool pivot(std::int32_t r, std::int32_t q, bool leave_to_lower, const std::vector<double>& rho) {
        const std::int32_t m = num_rows();
        std::vector<double> u(m, 0.0);
        if (q < n_) {
            for (const auto& ce : cols_[q]) {
                const double a = ce.value;
                for (std::int32_t i = 0; i < m; ++i) u[i] += binv_[static_cast<std::size_t>(i) * m + ce.row] * a;
            }
        } else {
            const std::int32_t row = q - n_;
            for (std::int32_t i = 0; i < m; ++i) u[i] = binv_[static_cast<std::size_t>(i) * m + row];
        }
        const double piv = u[r];
        if (std::abs(piv) < 1e-11 || std::abs(piv - alpha_[q]) > 1e-7 * (1.0 + std::abs(piv))) return false;
        const std::int32_t leave = head_[r];
        const double target = (leave < n_ && lower_[leave] == upper_[leave]) ? lower_[leave]
                              : leave_to_lower                                ? lower_of(leave)
                                                                              : upper_of(leave);
        // primal step: entering moves by t, basics by -t u
        const double t = (value_[leave] - target) / piv;
        for (std::int32_t i = 0; i < m; ++i) value_[head_[i]] -= t * u[i];
        value_[q] += t;
        // dual step
        const double theta_d = reduced_[q] / alpha_[q];
        for (std::size_t j = 0; j < reduced_.size(); ++j)
            if (status_[j] != VarStatus::basic) reduced_[j] -= theta_d * alpha_[j];
        for (std::int32_t i = 0; i < m; ++i) duals_[i] += theta_d * rho[i];
        reduced_[q] = 0.0;
        reduced_[leave] = -theta_d;

        double* br = &binv_[static_cast<std::size_t>(r) * m];
        for (std::int32_t k = 0; k < m; ++k) br[k] /= piv;
        for (std::int32_t i = 0; i < m; ++i) {
            if (i == r || u[i] == 0.0) continue;
            double* bi = &binv_[static_cast<std::size_t>(i) * m];
            const double f = u[i];
            for (std::int32_t k = 0; k < m; ++k) bi[k] -= f * br[k];
        }
        head_[r] = q;
        pos_[q] = r;
        pos_[leave] = -1;
        status_[q] = VarStatus::basic;
        if (leave < n_ && lower_[leave] == upper_[leave]) {
            status_[leave] = VarStatus::at_lower;
        } else {
            status_[leave] = leave_to_lower ? VarStatus::at_lower : VarStatus::at_upper;
        }
        value_[leave] = target;
        return true;
    }

    /// Inverts a dense k x k row-major matrix in place (Gauss-Jordan with
    /// partial pivoting). False if singular.
    static bool invert_dense(std::vector<double>& a, std::int32_t k) {
        std::vector<double> inv(static_cast<std::size_t>(k) * k, 0.0);
        for (std::int32_t i = 0; i < k; ++i) inv[static_cast<std::size_t>(i) * k + i] = 1.0;
        for (std::int32_t col = 0; col < k; ++col) {
            std::int32_t p = col;
            double best = std::abs(a[static_cast<std::size_t>(col) * k + col]);
            for (std::int32_t i = col + 1; i < k; ++i) {
                const double v = std::abs(a[static_cast<std::size_t>(i) * k + col]);
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (best < 1e-11) return false;
            if (p != col) {
                std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(p) * k,
                                 a.begin() + static_cast<std::ptrdiff_t>(p + 1) * k,
                                 a.begin() + static_cast<std::ptrdiff_t>(col) * k);
                std::swap_ranges(inv.begin() + static_cast<std::ptrdiff_t>(p) * k,
                                 inv.begin() + static_cast<std::ptrdiff_t>(p + 1) * k,
                                 inv.begin() + static_cast<std::ptrdiff_t>(col) * k);
            }
            double* ac = &a[static_cast<std::size_t>(col) * k];
            double* ic = &inv[static_cast<std::size_t>(col) * k];
            const double d = ac[col];
            for (std::int32_t c = 0; c < k; ++c) {
                ac[c] /= d;
                ic[c] /= d;
            }
            for (std::int32_t i = 0; i < k; ++i) {
                if (i == col) continue;
                double* ai = &a[static_cast<std::size_t>(i) * k];
                const double f = ai[col];
                if (f == 0.0) continue;
                double* ii = &inv[static_cast<std::size_t>(i) * k];
                for (std::int32_t c = col; c < k; ++c) ai[c] -= f * ac[c];
                for (std::int32_t c = 0; c < k; ++c) ii[c] -= f * ic[c];
            }
        }
        a = std::move(inv);
        return true;
    }

    /// Rebuilds B^{-1}. With basic structurals S and basic slacks T (rows R'
    /// are those whose slack is nonbasic, |R'| = |S|):
    ///     B^{-1} = [[K, 0], [-A_{T,S} K, I]],  K = A_{R',S}^{-1},
    /// so only an |S| x |S| block is inverted.
    bool refactor() {
        const std::int32_t m = num_rows();
        updates_since_refactor_ = 0;
        if (m == 0) {
            binv_.clear();
            return true;
        }
        std::vector<std::int32_t> s_index(n_, -1);
        std::vector<std::int32_t> s_pos;  // basis positions of structurals
        for (std::int32_t k = 0; k < m; ++k)
            if (head_[k] < n_) {
                s_index[head_[k]] = static_cast<std::int32_t>(s_pos.size());
                s_pos.push_back(k);
            }
        std::vector<std::int32_t> r_index(m, -1);  // row -> index in R'
        std::int32_t nr = 0;
        for (std::int32_t r = 0; r < m; ++r)
            if (status_[n_ + r] != VarStatus::basic) r_index[r] = nr++;
        const auto ns = static_cast<std::int32_t>(s_pos.size());
        if (nr != ns) return false;
        std::vector<double> kmat(static_cast<std::size_t>(ns) * ns, 0.0);
        for (std::int32_t c = 0; c < ns; ++c)
            for (const auto& ce : cols_[head_[s_pos[c]]])
                if (r_index[ce.row] >= 0) kmat[static_cast<std::size_t>(r_index[ce.row]) * ns + c] = ce.value;
        if (!invert_dense(kmat, ns)) return false;
        binv_.assign(static_cast<std::size_t>(m) * m, 0.0);
        std::vector<std::int32_t> r_rows(ns);
        for (std::int32_t r = 0; r < m; ++r)
            if (r_index[r] >= 0) r_rows[r_index[r]] = r;
        for (std::int32_t c = 0; c < ns; ++c) {
            double* dst = &binv_[static_cast<std::size_t>(s_pos[c]) * m];
            const double* src = &kmat[static_cast<std::size_t>(c) * ns];
            for (std::int32_t i = 0; i < ns; ++i) dst[r_rows[i]] = src[i];
        }
        std::vector<double> acc(ns);
        for (std::int32_t k = 0; k < m; ++k) {
            if (head_[k] < n_) continue;
            const std::int32_t t = head_[k] - n_;
            std::fill(acc.begin(), acc.end(), 0.0);
            const auto& row = rows_[t];
            for (std::size_t e = 0; e < row.index.size(); ++e) {
                const auto c = s_index[row.index[e]];
                if (c < 0) continue;
                const double a = row.value[e];
                const double* kc = &kmat[static_cast<std::size_t>(c) * ns];
                for (std::int32_t i = 0; i < ns; ++i) acc[i] -= a * kc[i];
            }
            double* dst = &binv_[static_cast<std::size_t>(k) * m];
            for (std::int32_t i = 0; i < ns; ++i) dst[r_rows[i]] = acc[i];
            dst[t] = 1.0;
        }
        return true;
    }

    LpStatus finish(LpStatus st) {
        compute_primal();
        compute_duals();
        compute_safe_bound();
        failures_ = 0;
        return st;
    }

    std::int32_t n_;
    std::vector<double> cost_, lower_, upper_;
    SimplexOptions opt_;
    std::vector<std::vector<ColEntry>> cols_;
    std::vector<SparseRow> rows_;

    std::vector<VarStatus> status_;  // n + m
    std::vector<double> value_;      // n + m
    std::vector<std::int32_t> head_; // basis position -> variable
    std::vector<std::int32_t> pos_;  // variable -> basis position or -1
    std::vector<double> binv_;       // m x m row-major

    std::vector<double> duals_, reduced_, safe_reduced_, alpha_;
    double dual_bound_ = 0.0;
    std::int64_t iterations_ = 0;
    int updates_since_refactor_ = 0;
    int failures_ = 0;
};

}  // namespace mcbc
