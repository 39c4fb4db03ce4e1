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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mcbc/bnc.hpp"
#include "oracle.hpp"

namespace mcbc {
namespace {

WeightedGraph from_text(const char* text) { return build_graph(parse_maxcut(text)); }

Clock::time_point far_deadline() { return Clock::now() + std::chrono::hours(1); }

/// Dense +-1 graph that is far from solvable within a second.
WeightedGraph hard_instance() {
    std::mt19937_64 rng(40);
    return build_graph(oracle::random_pm1(rng, 30, 0.9));
}

void expect_consistent(const WeightedGraph& g, const SolveResult& r) {
    ASSERT_EQ(r.sides.size(), static_cast<std::size_t>(g.vertex_count()));
    EXPECT_NEAR(r.value, oracle::cut_value(g, r.sides), 1e-9);
    EXPECT_GE(r.dual_bound, r.value - 1e-9);
    EXPECT_NEAR(r.gap_percent, gap_percent(r.value, r.dual_bound), 1e-12);
}

// ---------------------------------------------------------------------------
// Small examples

TEST(Solve, UnitTriangle) {
    const auto g = from_text("3 3\n1 2 1\n2 3 1\n1 3 1\n");
    const auto r = solve(g);
    EXPECT_EQ(r.status, SolveStatus::optimal);
    EXPECT_DOUBLE_EQ(r.value, 2.0);
    EXPECT_EQ(r.nodes, 0);
    expect_consistent(g, r);
}

TEST(Solve, FiveCycle) {
    const auto g = from_text("5 5\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 1 1\n");
    const auto r = solve(g);
    EXPECT_DOUBLE_EQ(r.value, 4.0);
    EXPECT_DOUBLE_EQ(r.dual_bound, 4.0);
    expect_consistent(g, r);
}

TEST(Solve, EmptyGraph) {
    const auto g = from_text("4 0\n");
    const auto r = solve(g);
    EXPECT_EQ(r.status, SolveStatus::optimal);
    EXPECT_DOUBLE_EQ(r.value, 0.0);
    EXPECT_EQ(r.blocks, 0);
    EXPECT_EQ(r.sides.size(), 4U);
}

TEST(Solve, TwoTrianglesSharingAVertexAreTwoBlocks) {
    const auto g = from_text("5 6\n1 2 2\n2 3 1\n1 3 -1\n3 4 1\n4 5 1\n3 5 1\n");
    SolverConfig cfg;
    cfg.presolve = false;
    const auto r = solve(g, cfg);
    EXPECT_DOUBLE_EQ(r.value, 5.0);
    EXPECT_EQ(r.blocks, 2);
    EXPECT_EQ(r.enumerated_blocks, 2);
    expect_consistent(g, r);
    EXPECT_DOUBLE_EQ(solve(g).value, 5.0);
}

TEST(Solve, RandomTwentyVertexPm1) {
    std::mt19937_64 rng(7);
    const auto g = build_graph(oracle::random_pm1(rng, 20, 0.3));
    const auto r = solve(g);
    EXPECT_EQ(r.status, SolveStatus::optimal);
    EXPECT_DOUBLE_EQ(r.value, oracle::max_cut(g));
    expect_consistent(g, r);
}

TEST(SolveComponent, Examples) {
    SolverConfig cfg;
    const auto neg = from_text("2 1\n1 2 -3\n");
    const auto r1 = solve_component(neg, cfg, far_deadline());
    EXPECT_DOUBLE_EQ(r1.best.weight, 0.0);
    EXPECT_DOUBLE_EQ(r1.dual_bound, 0.0);
    const auto tri = from_text("3 3\n1 2 2\n2 3 1\n1 3 -1\n");
    const auto r2 = solve_component(tri, cfg, far_deadline());
    EXPECT_DOUBLE_EQ(r2.best.weight, 3.0);
    cfg.enum_threshold = 0;
    const auto r3 = solve_component(tri, cfg, far_deadline());
    EXPECT_DOUBLE_EQ(r3.best.weight, 3.0);
    EXPECT_EQ(r3.status, SolveStatus::optimal);
}

TEST(Enumerate, MatchesBruteForce) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        const auto g = build_graph(oracle::random_maxcut(rng, 1 + rng() % 12, 0.5, -5, 5));
        const auto s = enumerate_maxcut(g);
        EXPECT_DOUBLE_EQ(s.weight, oracle::max_cut(g));
        EXPECT_DOUBLE_EQ(s.weight, oracle::cut_value(g, s.sides));
    }
}

// ---------------------------------------------------------------------------
// Exactness of the branch-and-cut path (no enumeration, optional presolve)

class ForcedBranchAndCut : public ::testing::TestWithParam<int> {};

TEST_P(ForcedBranchAndCut, MatchesBruteForce) {
    std::mt19937_64 rng(1000 + GetParam());
    SolverConfig cfg;
    cfg.enum_threshold = 0;
    cfg.presolve = GetParam() % 2 == 1;
    cfg.decompose = GetParam() < 2;
    cfg.heuristics = GetParam() != 3;
    for (int it = 0; it < 60; ++it) {
        const auto n = static_cast<VertexId>(4 + rng() % 10);
        const double density = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
        const auto g = build_graph(oracle::random_maxcut(rng, n, density, -5, 5));
        const auto r = solve(g, cfg);
        ASSERT_EQ(r.status, SolveStatus::optimal);
        EXPECT_DOUBLE_EQ(r.value, oracle::max_cut(g)) << "iteration " << it;
        expect_consistent(g, r);
    }
}

INSTANTIATE_TEST_SUITE_P(Variants, ForcedBranchAndCut, ::testing::Range(0, 4));

TEST(Solve, FractionalWeights) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> w(-2.0, 2.0);
    SolverConfig cfg;
    cfg.enum_threshold = 0;
    for (int it = 0; it < 40; ++it) {
        RawMaxCutInstance raw;
        raw.num_vertices = 8 + rng() % 5;
        for (VertexId u = 1; u <= raw.num_vertices; ++u)
            for (VertexId v = u + 1; v <= raw.num_vertices; ++v)
                if (rng() % 2) raw.edges.push_back({u, v, w(rng)});
        const auto g = build_graph(raw);
        const auto r = solve(g, cfg);
        EXPECT_NEAR(r.value, oracle::max_cut(g), 1e-7);
    }
}

TEST(Solve, LpBoundsNeverCutOffTheOptimum) {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 40; ++it) {
        const auto g = build_graph(oracle::random_maxcut(rng, 6 + rng() % 6, 0.6, -5, 5));
        SolverConfig cfg;
        cfg.enum_threshold = 0;
        cfg.presolve = false;
        cfg.decompose = false;
        const double opt = oracle::max_cut(g);
        int calls = 0;
        cfg.lp_observer = [&](const WeightedGraph&, const LpState& st) {
            ++calls;
            // the root LP (all edges free) bounds the global optimum
            bool all_free = true;
            for (std::size_t e = 0; e < st.lower.size(); ++e) all_free = all_free && st.lower[e] != st.upper[e];
            if (all_free && st.optimal()) {
                EXPECT_GE(st.objective, opt - 1e-7);
            }
        };
        solve(g, cfg);
        EXPECT_GT(calls, 0);
    }
}

// ---------------------------------------------------------------------------
// Branching rule

TEST(Branching, SingleFractionalEdge) {
    const auto g = from_text("3 3\n1 2 1\n2 3 1\n1 3 1\n");
    const std::vector<double> x{1.0, 0.4, 0.0};
    EXPECT_EQ(select_branching_edge(g, x, PseudoCostStats(3)), 1);
}

TEST(Branching, WeightDecidesWithoutStatistics) {
    const auto g = from_text("3 2\n1 2 5\n2 3 1\n");
    const std::vector<double> x{0.5, 0.5};
    EXPECT_EQ(select_branching_edge(g, x, PseudoCostStats(2)), g.find_edge(0, 1));
}

TEST(Branching, PseudoCostsDominateWeights) {
    const auto g = from_text("3 2\n1 2 5\n2 3 1\n");
    const auto heavy = g.find_edge(0, 1), light = g.find_edge(1, 2);
    PseudoCostStats stats(2);
    stats.update(light, true, 4.0);
    stats.update(light, false, 4.0);
    stats.update(heavy, true, 0.1);
    stats.update(heavy, false, 0.1);
    const std::vector<double> x{0.5, 0.5};
    EXPECT_EQ(select_branching_edge(g, x, stats), light);
}

TEST(Branching, FixedEdgesSkipped) {
    const auto g = from_text("3 2\n1 2 5\n2 3 1\n");
    const std::vector<double> x{0.5, 0.5};
    std::vector<std::int8_t> fixed(2, -1);
    fixed[g.find_edge(0, 1)] = 1;
    EXPECT_EQ(select_branching_edge(g, x, PseudoCostStats(2), fixed), g.find_edge(1, 2));
}

TEST(Branching, IntegralPointThrows) {
    const auto g = from_text("3 2\n1 2 5\n2 3 1\n");
    const std::vector<double> x{1.0, 0.0};
    EXPECT_THROW(select_branching_edge(g, x, PseudoCostStats(2)), std::logic_error);
}

TEST(PseudoCost, FallsBackToGlobalAverages) {
    PseudoCostStats stats(3);
    stats.update(0, true, 2.0);
    stats.update(1, true, 4.0);
    stats.update(1, false, -1.0);  // clamped at zero
    EXPECT_DOUBLE_EQ(stats.avg_up(0), 2.0);
    EXPECT_DOUBLE_EQ(stats.avg_up(2), 3.0);
    EXPECT_DOUBLE_EQ(stats.avg_down(1), 0.0);
    EXPECT_DOUBLE_EQ(stats.avg_down(2), 0.0);
}

TEST(Gap, Percent) {
    EXPECT_DOUBLE_EQ(gap_percent(10.0, 11.0), 10.0);
    EXPECT_DOUBLE_EQ(gap_percent(10.0, 10.0), 0.0);
    EXPECT_DOUBLE_EQ(gap_percent(0.0, 0.5), 50.0);
    EXPECT_DOUBLE_EQ(gap_percent(5.0, 4.0), 0.0);
}

// ---------------------------------------------------------------------------
// Limits

TEST(Limits, TimeLimit) {
    const auto g = hard_instance();
    SolverConfig cfg;
    cfg.time_limit_s = 0.5;
    const auto r = solve(g, cfg);
    EXPECT_EQ(r.status, SolveStatus::time_limit);
    EXPECT_LT(r.wall_time_s, 10.0);
    EXPECT_GT(r.gap_percent, 0.0);
    EXPECT_GT(r.value, 0.0);
    expect_consistent(g, r);
}

TEST(Limits, NodeLimit) {
    const auto g = hard_instance();
    SolverConfig cfg;
    cfg.node_limit = 1;
    cfg.time_limit_s = 60.0;
    const auto r = solve(g, cfg);
    EXPECT_EQ(r.status, SolveStatus::time_limit);
    EXPECT_LE(r.nodes, 2);
    expect_consistent(g, r);
}

TEST(Limits, GapLimit) {
    const auto g = hard_instance();
    SolverConfig cfg;
    cfg.gap_percent = 50.0;
    cfg.time_limit_s = 60.0;
    const auto r = solve(g, cfg);
    EXPECT_NE(r.status, SolveStatus::time_limit);
    EXPECT_LE(r.gap_percent, 50.0);
    expect_consistent(g, r);
}

TEST(Limits, DualBoundValidUnderTimeLimit) {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 5; ++it) {
        const auto g = build_graph(oracle::random_pm1(rng, 18, 0.6));
        SolverConfig cfg;
        cfg.time_limit_s = 0.01;
        cfg.enum_threshold = 0;
        const auto r = solve(g, cfg);
        const double opt = oracle::max_cut(g);
        EXPECT_GE(r.dual_bound, opt - 1e-9);
        EXPECT_LE(r.value, opt + 1e-9);
    }
}

}  // namespace
}  // namespace mcbc
