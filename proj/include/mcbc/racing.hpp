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

/// \file racing.hpp
/// \brief Seed-portfolio racing: diversified branch-and-cut workers and one
/// heuristic-only worker per block, sharing incumbents and root fixings.
/// The first worker to finish (optimal or within the gap) wins; there is no
/// node redistribution.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mcbc/bnc.hpp"

namespace mcbc {

struct RacingOptions {
    /// Exchange incumbents and root fixings between workers.
    bool share = true;
};

/// Worker `i` of a race: distinct seed, and every other worker uses a
/// different separation / heuristic preset.
inline SolverConfig racing_preset(const SolverConfig& base, int i) {
    SolverConfig c = base;
    c.seed = base.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i);
    switch (i % 3) {
        case 1:
            c.sepa.extra_paths = !base.sepa.extra_paths;
            c.heur_restarts = base.heur_restarts * 2;
            break;
        case 2:
            c.tailing_rounds = base.tailing_rounds + 2;
            c.heur_restarts = std::max(1, base.heur_restarts / 2);
            break;
        default: break;
    }
    return c;
}

/// Races k-1 BranchAndCut workers plus one heuristic worker on one block.
inline ComponentResult race_component(const WeightedGraph& g, const SolverConfig& cfg, Clock::time_point deadline,
                                      std::atomic<std::int64_t>* node_budget, int k, RacingOptions ropt = {}) {
    if (k <= 1 || g.vertex_count() <= std::max<std::int32_t>(cfg.enum_threshold, 1))
        return solve_component(g, cfg, deadline, node_budget);

    RaceChannel channel;
    channel.share = ropt.share;
    const int solvers = k - 1;
    std::vector<SolverConfig> configs;
    configs.reserve(static_cast<std::size_t>(solvers));
    for (int i = 0; i < solvers; ++i) configs.push_back(racing_preset(cfg, i));

    std::mutex result_mutex;
    std::optional<ComponentResult> winner;
    std::vector<std::optional<ComponentResult>> partial(static_cast<std::size_t>(solvers));

    std::vector<std::thread> threads;
    for (int i = 0; i < solvers; ++i) {
        threads.emplace_back([&, i] {
            try {
                BranchAndCut bnc(g, configs[i], deadline, node_budget, &channel);
                auto r = bnc.run();
                std::lock_guard<std::mutex> lock(result_mutex);
                if (r.status != SolveStatus::time_limit && !winner) {
                    winner = r;
                    channel.stop.store(true);
                    cfg.log.debug(strprintf("race: worker %d finished first after %lld nodes", i,
                                            static_cast<long long>(r.nodes)));
                }
                partial[i] = std::move(r);
            } catch (const std::exception& ex) {
                cfg.log.info(strprintf("race: worker %d failed: %s", i, ex.what()));
            }
        });
    }
    // heuristic-only worker; it never stops the race itself
    CutSolution heuristic_best{Assignment(g.vertex_count(), 0), 0.0};
    threads.emplace_back([&] {
        try {
            HeuristicOptions ho;
            ho.restarts = 1;
            for (std::uint64_t round = 1; !channel.stop.load() && Clock::now() < deadline; ++round) {
                std::optional<CutSolution> warm;
                CutSolution shared;
                if (channel.fetch_better(-std::numeric_limits<double>::infinity(), shared)) warm = shared;
                auto s = burer_rank2(g, cfg.seed + 0xA24BAED4963EE407ULL * round, warm ? &*warm : nullptr, ho);
                s.weight = cut_weight(g, s.sides);
                if (s.weight > heuristic_best.weight) heuristic_best = s;
                channel.offer(s);
                // all solver workers may have ended without a winner
                std::lock_guard<std::mutex> lock(result_mutex);
                bool all_done = true;
                for (const auto& p : partial) all_done = all_done && p.has_value();
                if (all_done || winner) break;
            }
        } catch (const std::exception& ex) {
            cfg.log.info(strprintf("race: heuristic worker failed: %s", ex.what()));
        }
    });
    // the heuristic worker polls `partial`, so failed solvers must be marked
    for (int i = 0; i < solvers; ++i) {
        threads[static_cast<std::size_t>(i)].join();
        std::lock_guard<std::mutex> lock(result_mutex);
        if (!partial[i]) {
            ComponentResult failed;
            failed.status = SolveStatus::time_limit;
            failed.dual_bound = std::numeric_limits<double>::infinity();
            failed.best = {Assignment(g.vertex_count(), 0), 0.0};
            partial[i] = failed;
        }
    }
    channel.stop.store(true);
    threads.back().join();

    if (winner) return *winner;
    // nobody proved optimality: best incumbent, tightest valid bound
    ComponentResult out;
    out.status = SolveStatus::time_limit;
    out.best = heuristic_best;
    out.dual_bound = std::numeric_limits<double>::infinity();
    for (const auto& p : partial) {
        if (p->best.weight > out.best.weight) out.best = p->best;
        out.dual_bound = std::min(out.dual_bound, p->dual_bound);
        out.nodes = std::max(out.nodes, p->nodes);
        if (p->status == SolveStatus::gap_limit) out.status = SolveStatus::gap_limit;
    }
    if (!std::isfinite(out.dual_bound)) {
        // every solver failed; fall back to a single-threaded run
        return solve_component(g, cfg, deadline, node_budget);
    }
    out.dual_bound = std::max(out.dual_bound, out.best.weight);
    return out;
}

/// Like solve(), but each block is raced by `k` workers. k = 1 is solve().
inline SolveResult racing_solve(const WeightedGraph& g, const SolverConfig& cfg, int k, RacingOptions ropt = {}) {
    if (k < 1) throw std::invalid_argument("racing needs at least one worker");
    if (k == 1) return solve(g, cfg);
    return solve_with(g, cfg,
                      [k, ropt](const WeightedGraph& b, const SolverConfig& c, Clock::time_point d,
                                std::atomic<std::int64_t>* budget) { return race_component(b, c, d, budget, k, ropt); });
}

}  // namespace mcbc
