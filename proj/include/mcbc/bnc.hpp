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

/// \file bnc.hpp
/// \brief Branch-and-cut driver: presolve, block decomposition, per-block
/// enumeration or LP-based branch-and-cut, and reassembly of the solution.

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "mcbc/common.hpp"
#include "mcbc/graph.hpp"
#include "mcbc/heuristics.hpp"
#include "mcbc/instance_io.hpp"
#include "mcbc/log.hpp"
#include "mcbc/lp.hpp"
#include "mcbc/presolve.hpp"
#include "mcbc/propagate.hpp"
#include "mcbc/separation.hpp"

namespace mcbc {

using Clock = std::chrono::steady_clock;

/// Called after every LP solve with the block graph being solved.
using LpObserver = std::function<void(const WeightedGraph&, const LpState&)>;

struct SolverConfig {
    double time_limit_s = 3600.0;
    double gap_percent = 0.0;
    int threads = 1;
    std::uint64_t seed = 0;
    std::int32_t enum_threshold = 10;
    std::int64_t node_limit = -1;  // < 0: unlimited
    bool presolve = true;
    bool decompose = true;
    bool propagation = true;
    bool heuristics = true;
    int heur_restarts = 8;
    int tailing_rounds = 3;
    double tailing_rel = 1e-4;
    int max_rounds_per_node = 200;
    PresolveOptions presolve_opt;
    SeparationOptions sepa;
    LpOptions lp;
    Logger log;
    LpObserver lp_observer;
};

struct ComponentResult {
    CutSolution best;
    double dual_bound = 0.0;
    std::int64_t nodes = 0;
    SolveStatus status = SolveStatus::optimal;
};

struct SolveResult {
    SolveStatus status = SolveStatus::optimal;
    double value = 0.0;
    double dual_bound = 0.0;
    double gap_percent = 0.0;
    std::int64_t nodes = 0;
    double wall_time_s = 0.0;
    Assignment sides;
    PresolveStats presolve;
    std::int32_t blocks = 0;
    std::int32_t enumerated_blocks = 0;
};

inline double gap_percent(double primal, double dual) {
    return std::max(0.0, 100.0 * (dual - primal) / std::max(std::abs(primal), 1.0));
}

// ---------------------------------------------------------------------------
// Enumeration

/// Exact maximum cut by Gray-code enumeration with vertex 0 pinned to side 0.
inline CutSolution enumerate_maxcut(const WeightedGraph& g) {
    const VertexId n = g.vertex_count();
    if (n > 30) throw std::invalid_argument("graph too large for enumeration");
    Assignment y(n, 0);
    CutSolution best{y, 0.0};
    if (n <= 1) return best;
    auto gain = flip_gains(g, y);
    double cur = 0.0;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < total; ++k) {
        const VertexId v = static_cast<VertexId>(std::countr_zero(k)) + 1;
        cur += gain[v];
        y[v] ^= 1U;
        gain[v] = -gain[v];
        for (const auto& a : g.neighbors(v)) gain[a.head] += y[a.head] == y[v] ? 2.0 * a.weight : -2.0 * a.weight;
        if (cur > best.weight + 1e-12) {
            best.weight = cur;
            best.sides = y;
        }
    }
    best.weight = cut_weight(g, best.sides);
    return best;
}

// ---------------------------------------------------------------------------
// Pseudo-costs

struct PseudoCostStats {
    std::vector<double> down_sum, up_sum;
    std::vector<std::int32_t> down_count, up_count;
    double global_down_sum = 0.0, global_up_sum = 0.0;
    std::int64_t global_down_count = 0, global_up_count = 0;

    explicit PseudoCostStats(std::size_t edges = 0)
        : down_sum(edges, 0.0), up_sum(edges, 0.0), down_count(edges, 0), up_count(edges, 0) {}

    /// Records a bound degradation per unit of change in direction up/down.
    void update(EdgeId e, bool up, double per_unit) {
        per_unit = std::max(per_unit, 0.0);
        if (up) {
            up_sum[e] += per_unit;
            ++up_count[e];
            global_up_sum += per_unit;
            ++global_up_count;
        } else {
            down_sum[e] += per_unit;
            ++down_count[e];
            global_down_sum += per_unit;
            ++global_down_count;
        }
    }
    bool empty() const { return global_down_count == 0 && global_up_count == 0; }
    double avg_down(EdgeId e) const {
        if (down_count[e] > 0) return down_sum[e] / down_count[e];
        if (global_down_count > 0) return global_down_sum / static_cast<double>(global_down_count);
        return global_up_count > 0 ? global_up_sum / static_cast<double>(global_up_count) : 0.0;
    }
    double avg_up(EdgeId e) const {
        if (up_count[e] > 0) return up_sum[e] / up_count[e];
        if (global_up_count > 0) return global_up_sum / static_cast<double>(global_up_count);
        return global_down_count > 0 ? global_down_sum / static_cast<double>(global_down_count) : 0.0;
    }
};

inline constexpr double kIntegralityTol = 1e-6;

inline bool is_fractional(double v) { return v > kIntegralityTol && v < 1.0 - kIntegralityTol; }

/// Pseudo-cost branching: score = max(down, eps) * max(up, eps) with
/// down = avg_down * f and up = avg_up * (1 - f). Without any statistics
/// the score is |w| * min(f, 1 - f). Ties go to the lower edge id.
inline EdgeId select_branching_edge(const WeightedGraph& g, std::span<const double> x, const PseudoCostStats& stats,
                                    std::span<const std::int8_t> fixed = {}) {
    constexpr double eps = 1e-6;
    EdgeId best = kNoEdge;
    double best_score = -1.0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(x.size()); ++e) {
        if (!fixed.empty() && fixed[e] >= 0) continue;
        const double f = x[e];
        if (!is_fractional(f)) continue;
        double score;
        if (stats.empty()) {
            score = std::abs(g.weight(e)) * std::min(f, 1.0 - f);
        } else {
            score = std::max(stats.avg_down(e) * f, eps) * std::max(stats.avg_up(e) * (1.0 - f), eps);
        }
        if (score > best_score) {
            best_score = score;
            best = e;
        }
    }
    if (best == kNoEdge) throw std::logic_error("select_branching_edge: no fractional edge");
    return best;
}

// ---------------------------------------------------------------------------
// Incumbent exchange between concurrent workers

struct RaceChannel {
    std::mutex mutex;
    std::atomic<bool> stop{false};
    bool share = true;
    double best_value = -std::numeric_limits<double>::infinity();
    Assignment best_sides;
    std::vector<EdgeFix> root_fixes;
    std::atomic<std::int32_t> root_fix_version{0};

    void offer(const CutSolution& s) {
        if (!share) return;
        std::lock_guard<std::mutex> lock(mutex);
        if (s.weight > best_value) {
            best_value = s.weight;
            best_sides = s.sides;
        }
    }
    bool fetch_better(double than, CutSolution& out) {
        if (!share) return false;
        std::lock_guard<std::mutex> lock(mutex);
        if (best_value <= than) return false;
        out.sides = best_sides;
        out.weight = best_value;
        return true;
    }
    void post_root_fixes(std::span<const EdgeFix> fixes) {
        if (!share || fixes.empty()) return;
        std::lock_guard<std::mutex> lock(mutex);
        root_fixes.insert(root_fixes.end(), fixes.begin(), fixes.end());
        root_fix_version.fetch_add(1);
    }
    std::vector<EdgeFix> fetch_root_fixes() {
        std::lock_guard<std::mutex> lock(mutex);
        return root_fixes;
    }
};

// ---------------------------------------------------------------------------
// Branch-and-cut on one block

class BranchAndCut {
 public:
    enum class NodeOutcome { pruned, branched, solved };

    struct Node {
        std::vector<std::int8_t> fix;  // -1 free, 0/1 fixed
        double bound = std::numeric_limits<double>::infinity();
        std::int32_t depth = 0;
        std::int64_t seq = 0;
        EdgeId branch_edge = kNoEdge;
        bool branch_up = false;
        double branch_frac = 0.0;
    };

    BranchAndCut(const WeightedGraph& g, const SolverConfig& cfg, Clock::time_point deadline,
                 std::atomic<std::int64_t>* node_budget = nullptr, RaceChannel* channel = nullptr)
        : g_(g),
          cfg_(cfg),
          deadline_(deadline),
          node_budget_(node_budget),
          channel_(channel),
          lp_(g, cfg.lp),
          stats_(static_cast<std::size_t>(g.edge_count())),
          global_fix_(static_cast<std::size_t>(g.edge_count()), -1) {
        incumbent_.sides.assign(g.vertex_count(), 0);
        incumbent_.weight = 0.0;
    }

    const CutSolution& incumbent() const { return incumbent_; }
    std::int64_t nodes() const { return nodes_; }

    /// Offers an externally found cut (revalidated).
    bool offer(const Assignment& y, const char* source = "external") {
        const double w = cut_weight(g_, y);
        if (w <= incumbent_.weight + 1e-9 * std::max(1.0, std::abs(w))) return false;
        incumbent_.sides = y;
        incumbent_.weight = w;
        if (channel_ != nullptr) channel_->offer(incumbent_);
        cfg_.log.debug(strprintf("incumbent %.10g from %s", w, source));
        return true;
    }

    ComponentResult run() {
        const auto start = Clock::now();
        if (cfg_.heuristics) {
            HeuristicOptions ho;
            ho.restarts = cfg_.heur_restarts;
            offer(burer_rank2(g_, cfg_.seed, nullptr, ho).sides, "rank2");
        }
        Node root;
        root.fix.assign(static_cast<std::size_t>(g_.edge_count()), -1);
        push(std::move(root));
        ComponentResult res;
        res.status = SolveStatus::optimal;
        double global_dual = std::numeric_limits<double>::infinity();
        while (!open_.empty()) {
            sync_channel();
            if (stopped()) {
                res.status = SolveStatus::time_limit;
                break;
            }
            global_dual = std::min(global_dual, std::max(open_.top().bound, incumbent_.weight));
            if (cfg_.gap_percent > 0.0 && gap_percent(incumbent_.weight, global_dual) <= cfg_.gap_percent) {
                res.status = SolveStatus::gap_limit;
                break;
            }
            Node node = open_.top();
            open_.pop();
            if (prunable(node.bound)) continue;
            if (node_budget_ != nullptr && node_budget_->fetch_sub(1) <= 0) {
                push(std::move(node));
                res.status = SolveStatus::time_limit;
                break;
            }
            ++nodes_;
            process_node(node, start);
        }
        if (res.status == SolveStatus::optimal) {
            res.dual_bound = incumbent_.weight;
        } else {
            double d = incumbent_.weight;
            // open nodes carry valid bounds; the heap top is the largest
            if (!open_.empty()) d = std::max(d, open_.top().bound);
            res.dual_bound = std::min(d, std::max(global_dual, incumbent_.weight));
        }
        res.best = incumbent_;
        res.nodes = nodes_;
        return res;
    }

    /// Processes one node: cutting-plane loop, propagation, heuristics, then
    /// branching. Children are pushed onto the open list.
    NodeOutcome process_node(Node& node, Clock::time_point start) {
        std::vector<double> lo(g_.edge_count()), up(g_.edge_count());
        std::vector<double> history;
        LpState st;
        bool posted_root_fixes = false;
        for (int round = 1;; ++round) {
            if (!apply_global_fixes(node)) return NodeOutcome::pruned;
            for (EdgeId e = 0; e < g_.edge_count(); ++e) {
                lo[e] = node.fix[e] == 1 ? 1.0 : 0.0;
                up[e] = node.fix[e] == 0 ? 0.0 : 1.0;
            }
            st = lp_.solve(lo, up);
            lp_.purge_cuts();
            if (cfg_.lp_observer) cfg_.lp_observer(g_, st);
            if (st.status == LpStatus::infeasible) return NodeOutcome::pruned;
            if (round == 1 && node.branch_edge != kNoEdge) record_pseudocost(node, st.objective);
            node.bound = std::min(node.bound, st.objective);
            if (prunable(node.bound)) return NodeOutcome::pruned;
            if (!st.optimal()) return branch_unresolved(node, st);

            if (cfg_.propagation) {
                auto fixes = reduced_cost_fix(st, incumbent_.weight);
                const auto pa = rebuild_partial_assignment(g_, lo, up);
                if (pa.infeasible) return NodeOutcome::pruned;
                auto impl = implication_fix(st, incumbent_.weight, pa, g_);
                if (impl.prune) return NodeOutcome::pruned;
                fixes.insert(fixes.end(), impl.fixes.begin(), impl.fixes.end());
                bool changed = false;
                for (const auto& f : fixes) {
                    if (node.fix[f.edge] == static_cast<std::int8_t>(f.value)) continue;
                    if (node.fix[f.edge] >= 0) return NodeOutcome::pruned;
                    node.fix[f.edge] = static_cast<std::int8_t>(f.value);
                    changed = true;
                }
                if (node.depth == 0 && channel_ != nullptr && !posted_root_fixes && !fixes.empty()) {
                    channel_->post_root_fixes(fixes);
                    posted_root_fixes = true;
                }
                if (changed) {
                    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
                        lo[e] = node.fix[e] == 1 ? 1.0 : 0.0;
                        up[e] = node.fix[e] == 0 ? 0.0 : 1.0;
                    }
                    if (rebuild_partial_assignment(g_, lo, up).infeasible) return NodeOutcome::pruned;
                    if (round < cfg_.max_rounds_per_node) continue;
                }
            }

            if (try_integral(st.x)) return NodeOutcome::solved;

            if (stopped()) break;
            auto cuts = separate_triangles(g_, st.x, cfg_.sepa.threshold, cfg_.sepa.triangle_budget);
            if (cuts.empty()) {
                cuts = separate_exact(g_, st.x, cfg_.sepa);
            } else {
                limit_cuts(cuts, st.x);
            }
            const auto added = lp_.add_cuts(cuts, st.x);

            if (cfg_.heuristics) {
                const auto h = spanning_tree_rounding(g_, st.x);
                if (offer(h.sides, "tree") && cfg_.heur_restarts > 0) {
                    HeuristicOptions ho;
                    ho.restarts = 1;
                    offer(burer_rank2(g_, cfg_.seed + static_cast<std::uint64_t>(nodes_), &incumbent_, ho).sides,
                          "rank2-warm");
                }
            }
            cfg_.log.info(strprintf("round %d: dual=%.10g, primal=%.10g, cuts=+%zu, time=%.3f", ++log_round_,
                                    node.bound, incumbent_.weight, added,
                                    std::chrono::duration<double>(Clock::now() - start).count()));
            if (prunable(node.bound)) return NodeOutcome::pruned;
            history.push_back(st.objective);
            if (added == 0) break;
            const auto h = history.size();
            if (h > static_cast<std::size_t>(cfg_.tailing_rounds)) {
                const double before = history[h - 1 - static_cast<std::size_t>(cfg_.tailing_rounds)];
                if (before - history.back() < cfg_.tailing_rel * std::max(1.0, std::abs(history.back()))) break;
            }
            if (round >= cfg_.max_rounds_per_node || stopped()) break;
        }
        // a last look: the final LP point may be integral after the loop exit
        if (try_integral(st.x)) return NodeOutcome::solved;
        if (prunable(node.bound)) return NodeOutcome::pruned;
        if (std::none_of(st.x.begin(), st.x.end(), is_fractional)) return branch_unresolved(node, st);
        const EdgeId e = select_branching_edge(g_, st.x, stats_, node.fix);
        branch(node, e, st.x[e]);
        return NodeOutcome::branched;
    }

 private:
    struct NodeOrder {
        bool operator()(const Node& a, const Node& b) const {
            if (a.bound != b.bound) return a.bound < b.bound;
            if (a.depth != b.depth) return a.depth < b.depth;
            return a.seq > b.seq;
        }
    };

    /// Keeps the most violated cuts, up to the per-round limit.
    void limit_cuts(std::vector<CycleCut>& cuts, std::span<const double> x) const {
        const std::size_t cap = cfg_.sepa.max_cuts_per_round < 0 ? 2 * static_cast<std::size_t>(g_.vertex_count())
                                                                  : static_cast<std::size_t>(cfg_.sepa.max_cuts_per_round);
        if (cuts.size() <= cap) return;
        std::vector<std::pair<double, std::size_t>> order;
        order.reserve(cuts.size());
        for (std::size_t i = 0; i < cuts.size(); ++i) order.emplace_back(-cuts[i].violation(x), i);
        std::stable_sort(order.begin(), order.end());
        std::vector<CycleCut> kept;
        kept.reserve(cap);
        for (std::size_t i = 0; i < cap; ++i) kept.push_back(std::move(cuts[order[i].second]));
        cuts = std::move(kept);
    }

    void push(Node n) {
        n.seq = seq_++;
        open_.push(std::move(n));
    }

    bool stopped() const {
        if (Clock::now() >= deadline_) return true;
        return channel_ != nullptr && channel_->stop.load();
    }

    bool prunable(double bound) const {
        if (g_.all_integral()) return std::floor(bound + 1e-6) <= incumbent_.weight;
        return bound <= incumbent_.weight + 1e-9 * std::max(1.0, std::abs(incumbent_.weight));
    }

    void sync_channel() {
        if (channel_ == nullptr) return;
        CutSolution s;
        if (channel_->fetch_better(incumbent_.weight, s)) offer(s.sides, "shared");
        const auto ver = channel_->root_fix_version.load();
        if (ver != seen_fix_version_) {
            seen_fix_version_ = ver;
            for (const auto& f : channel_->fetch_root_fixes()) {
                if (global_fix_[f.edge] < 0) global_fix_[f.edge] = static_cast<std::int8_t>(f.value);
            }
        }
    }

    /// Merges shared root fixings into the node; false on conflict.
    bool apply_global_fixes(Node& node) const {
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (global_fix_[e] < 0) continue;
            if (node.fix[e] < 0) node.fix[e] = global_fix_[e];
            else if (node.fix[e] != global_fix_[e]) return false;
        }
        return true;
    }

    /// `node.bound` still holds the parent's bound here.
    void record_pseudocost(const Node& node, double child_bound) {
        if (!std::isfinite(node.bound) || !std::isfinite(child_bound)) return;
        const double delta = std::max(0.0, node.bound - child_bound);
        const double unit = node.branch_up ? 1.0 - node.branch_frac : node.branch_frac;
        if (unit > 1e-9) stats_.update(node.branch_edge, node.branch_up, delta / unit);
    }

    /// Accepts an integral LP point if it is a cut; true if the node is done.
    bool try_integral(std::span<const double> x) {
        if (std::any_of(x.begin(), x.end(), is_fractional)) return false;
        ParityUnionFind uf(g_.vertex_count());
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            const auto& ed = g_.edge(e);
            if (!uf.unite(ed.u, ed.v, x[e] > 0.5 ? 1 : 0)) return false;
        }
        Assignment y(g_.vertex_count());
        for (VertexId v = 0; v < g_.vertex_count(); ++v) y[v] = uf.find(v).second;
        offer(y, "lp");
        return true;
    }

    void branch(const Node& node, EdgeId e, double frac) {
        for (int dir = 0; dir < 2; ++dir) {
            Node child;
            child.fix = node.fix;
            child.fix[e] = static_cast<std::int8_t>(dir);
            child.bound = node.bound;
            child.depth = node.depth + 1;
            child.branch_edge = e;
            child.branch_up = dir == 1;
            child.branch_frac = frac;
            push(std::move(child));
        }
    }

    /// Fallback when the LP could not be solved to optimality: branch on the
    /// most fractional free edge, or evaluate a fully fixed node directly.
    NodeOutcome branch_unresolved(Node& node, const LpState& st) {
        EdgeId best = kNoEdge;
        double best_dist = 2.0;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (node.fix[e] >= 0) continue;
            const double v = e < static_cast<EdgeId>(st.x.size()) ? st.x[e] : 0.5;
            const double d = std::abs(v - 0.5);
            if (d < best_dist) {
                best_dist = d;
                best = e;
            }
        }
        if (best == kNoEdge) {
            std::vector<double> x(g_.edge_count());
            for (EdgeId e = 0; e < g_.edge_count(); ++e) x[e] = node.fix[e];
            try_integral(x);
            return NodeOutcome::solved;
        }
        branch(node, best, st.x.empty() ? 0.5 : std::clamp(st.x[best], 0.0, 1.0));
        return NodeOutcome::branched;
    }

    const WeightedGraph& g_;
    const SolverConfig& cfg_;
    Clock::time_point deadline_;
    std::atomic<std::int64_t>* node_budget_;
    RaceChannel* channel_;
    LpRelaxation lp_;
    PseudoCostStats stats_;
    std::vector<std::int8_t> global_fix_;
    std::int32_t seen_fix_version_ = 0;
    CutSolution incumbent_;
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open_;
    std::int64_t seq_ = 0;
    std::int64_t nodes_ = 0;
    int log_round_ = 0;
};

// ---------------------------------------------------------------------------
// Whole-instance driver

/// Solves one block; the default runs enumeration or BranchAndCut.
using BlockSolver = std::function<ComponentResult(const WeightedGraph&, const SolverConfig&, Clock::time_point,
                                                  std::atomic<std::int64_t>*)>;

inline ComponentResult solve_component(const WeightedGraph& g, const SolverConfig& cfg, Clock::time_point deadline,
                                       std::atomic<std::int64_t>* node_budget = nullptr) {
    if (g.vertex_count() <= std::max<std::int32_t>(cfg.enum_threshold, 1)) {
        ComponentResult r;
        r.best = enumerate_maxcut(g);
        r.dual_bound = r.best.weight;
        return r;
    }
    BranchAndCut bnc(g, cfg, deadline, node_budget);
    return bnc.run();
}

namespace detail {

struct PreparedInstance {
    PresolveResult pre;
    std::vector<Subgraph> blocks;
};

inline PreparedInstance prepare(const WeightedGraph& g, const SolverConfig& cfg) {
    PreparedInstance p;
    if (cfg.presolve) {
        p.pre = presolve_loop(g, cfg.presolve_opt);
    } else {
        p.pre.graph = g;
    }
    const auto& gr = p.pre.graph;
    if (gr.edge_count() == 0) return p;
    if (cfg.decompose) {
        for (const auto& b : biconnected_components(gr).blocks) p.blocks.push_back(edge_induced_subgraph(gr, b));
    } else {
        std::vector<EdgeId> all(gr.edge_count());
        std::iota(all.begin(), all.end(), 0);
        p.blocks.push_back(edge_induced_subgraph(gr, all));
    }
    return p;
}

/// Assembles block solutions into one assignment of the reduced graph by
/// walking the block-cut tree and flipping blocks to agree at shared vertices.
inline Assignment stitch(VertexId n, const std::vector<Subgraph>& blocks, const std::vector<ComponentResult>& res) {
    Assignment y(n, 0);
    std::vector<std::vector<std::int32_t>> blocks_of(n);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (auto v : blocks[b].vertices) blocks_of[v].push_back(static_cast<std::int32_t>(b));
    std::vector<std::uint8_t> placed(blocks.size(), 0);
    std::vector<std::int32_t> queue;
    auto place = [&](std::int32_t b, VertexId anchor) {
        const auto& verts = blocks[b].vertices;
        const auto& s = res[b].best.sides;
        std::uint8_t flip = 0;
        if (anchor != kNoVertex) {
            const auto it = std::lower_bound(verts.begin(), verts.end(), anchor);
            flip = static_cast<std::uint8_t>(y[anchor] ^ s[it - verts.begin()]);
        }
        for (std::size_t i = 0; i < verts.size(); ++i) y[verts[i]] = s[i] ^ flip;
        placed[b] = 1;
        queue.push_back(b);
    };
    for (std::size_t start = 0; start < blocks.size(); ++start) {
        if (placed[start]) continue;
        queue.clear();
        place(static_cast<std::int32_t>(start), kNoVertex);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (auto v : blocks[queue[qi]].vertices)
                for (auto nb : blocks_of[v])
                    if (!placed[nb]) place(nb, v);
        }
    }
    return y;
}

inline SolveResult assemble(const WeightedGraph& g, const SolverConfig& cfg, const PreparedInstance& p,
                            const std::vector<ComponentResult>& res, Clock::time_point start) {
    SolveResult out;
    out.presolve = p.pre.stats;
    out.blocks = static_cast<std::int32_t>(p.blocks.size());
    double dual = p.pre.trace.offset;
    bool any_time = false, any_gap = false;
    for (std::size_t b = 0; b < res.size(); ++b) {
        dual += res[b].dual_bound;
        out.nodes += res[b].nodes;
        if (p.blocks[b].graph.vertex_count() <= std::max<std::int32_t>(cfg.enum_threshold, 1)) ++out.enumerated_blocks;
        any_time = any_time || res[b].status == SolveStatus::time_limit;
        any_gap = any_gap || res[b].status == SolveStatus::gap_limit;
    }
    const auto y_reduced = stitch(p.pre.graph.vertex_count(), p.blocks, res);
    out.sides = p.pre.trace.lift(y_reduced);
    out.value = cut_weight(g, out.sides);
    if (g.all_integral()) dual = std::floor(dual + 1e-6);
    out.dual_bound = std::max(dual, out.value);
    out.status = any_time ? SolveStatus::time_limit : any_gap ? SolveStatus::gap_limit : SolveStatus::optimal;
    if (out.status == SolveStatus::optimal) out.dual_bound = out.value;
    out.gap_percent = gap_percent(out.value, out.dual_bound);
    out.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    cfg.log.debug(strprintf("presolve: %d rounds, %lld edges contracted; %d blocks (%d enumerated)",
                            out.presolve.rounds, static_cast<long long>(out.presolve.edges_contracted), out.blocks,
                            out.enumerated_blocks));
    return out;
}

}  // namespace detail

/// Runs presolve, splits into blocks and solves each with `block_solver`.
inline SolveResult solve_with(const WeightedGraph& g, const SolverConfig& cfg, const BlockSolver& block_solver) {
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(std::max(cfg.time_limit_s, 0.0)));
    auto prepared = detail::prepare(g, cfg);
    std::atomic<std::int64_t> budget(cfg.node_limit < 0 ? std::numeric_limits<std::int64_t>::max() : cfg.node_limit);
    std::vector<ComponentResult> res;
    res.reserve(prepared.blocks.size());
    for (const auto& b : prepared.blocks) res.push_back(block_solver(b.graph, cfg, deadline, &budget));
    return detail::assemble(g, cfg, prepared, res, start);
}

inline SolveResult solve(const WeightedGraph& g, const SolverConfig& cfg = {}) {
    return solve_with(g, cfg, [](const WeightedGraph& b, const SolverConfig& c, Clock::time_point d,
                                 std::atomic<std::int64_t>* budget) { return solve_component(b, c, d, budget); });
}

}  // namespace mcbc
