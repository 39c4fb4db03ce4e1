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
#include <numbers>
#include <random>

#include "mcbc/heuristics.hpp"
#include "oracle.hpp"

namespace mcbc {
namespace {

WeightedGraph from_text(const char* text) { return build_graph(parse_maxcut(text)); }

const char* kTriangle = "3 3\n1 2 1\n2 3 1\n1 3 1\n";
const char* kFourCycle = "4 4\n1 2 1\n2 3 1\n3 4 1\n4 1 1\n";
const char* kFiveCycle = "5 5\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 1 1\n";

TEST(BurerRank2, TriangleForManySeeds) {
    const auto g = from_text(kTriangle);
    for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_DOUBLE_EQ(burer_rank2(g, seed).weight, 2.0);
}

TEST(BurerRank2, FourCycleIsBipartite) {
    const auto g = from_text(kFourCycle);
    for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_DOUBLE_EQ(burer_rank2(g, seed).weight, 4.0);
}

TEST(BurerRank2, WarmStartNeverWorsens) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        const auto g = build_graph(oracle::random_maxcut(rng, 6 + rng() % 15, 0.4, -5, 5));
        Assignment y(g.vertex_count());
        for (auto& s : y) s = rng() & 1U;
        const CutSolution init{y, cut_weight(g, y)};
        HeuristicOptions opt;
        opt.restarts = 1;
        EXPECT_GE(burer_rank2(g, it, &init, opt).weight, init.weight - 1e-9);
    }
}

TEST(BurerRank2, DeterministicPerSeedAndWeightMatchesSides) {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 30; ++it) {
        const auto g = build_graph(oracle::random_maxcut(rng, 10 + rng() % 20, 0.3, -3, 3));
        const auto a = burer_rank2(g, 77);
        const auto b = burer_rank2(g, 77);
        EXPECT_EQ(a.sides, b.sides);
        EXPECT_EQ(a.weight, b.weight);
        EXPECT_NEAR(a.weight, cut_weight(g, a.sides), 1e-9);
        EXPECT_NEAR(a.weight, oracle::cut_value(g, a.sides), 1e-9);
    }
}

TEST(BurerRank2, EmptyGraph) {
    const auto g = from_text("3 0\n");
    const auto s = burer_rank2(g, 1);
    EXPECT_EQ(s.sides.size(), 3U);
    EXPECT_DOUBLE_EQ(s.weight, 0.0);
}

TEST(BurerRank2, CloseToOptimumOnSmallInstances) {
    std::mt19937_64 rng(9);
    int good = 0, total = 0;
    for (int it = 0; it < 100; ++it) {
        const auto g = build_graph(oracle::random_maxcut(rng, 8 + rng() % 7, 0.5, -5, 5));
        const double opt = oracle::max_cut(g);
        if (opt <= 0) continue;
        ++total;
        good += burer_rank2(g, it).weight >= 0.95 * opt - 1e-9;
    }
    EXPECT_GE(good, 0.9 * total);
}

TEST(KernighanLin, FourCycleFromAllSame) {
    const auto g = from_text(kFourCycle);
    const auto s = kernighan_lin(g, Assignment(4, 0));
    EXPECT_DOUBLE_EQ(s.weight, 4.0);
}

TEST(KernighanLin, OptimalTriangleUnchanged) {
    const auto g = from_text(kTriangle);
    const Assignment y{0, 1, 1};
    const auto s = kernighan_lin(g, y);
    EXPECT_EQ(s.sides, y);
    EXPECT_DOUBLE_EQ(s.weight, 2.0);
}

TEST(KernighanLin, NegativeEdgeNotCut) {
    const auto g = from_text("2 1\n1 2 -3\n");
    const auto s = kernighan_lin(g, Assignment(2, 0));
    EXPECT_EQ(s.sides[0], s.sides[1]);
    EXPECT_DOUBLE_EQ(s.weight, 0.0);
}

TEST(KernighanLin, LocallyOptimalAndNeverWorse) {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 200; ++it) {
        const auto g = build_graph(oracle::random_maxcut(rng, 4 + rng() % 20, 0.4, -5, 5));
        Assignment y(g.vertex_count());
        for (auto& s : y) s = rng() & 1U;
        const auto s = kernighan_lin(g, y);
        EXPECT_GE(s.weight, cut_weight(g, y) - 1e-9);
        EXPECT_NEAR(s.weight, cut_weight(g, s.sides), 1e-9);
        for (const double gain : flip_gains(g, s.sides)) EXPECT_LE(gain, 1e-9);
    }
}

TEST(FlipGains, MatchRecomputation) {
    std::mt19937_64 rng(7);
    const auto g = build_graph(oracle::random_maxcut(rng, 12, 0.5, -4, 4));
    Assignment y(g.vertex_count());
    for (auto& s : y) s = rng() & 1U;
    const auto gain = flip_gains(g, y);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto z = y;
        z[v] ^= 1U;
        EXPECT_NEAR(gain[v], cut_weight(g, z) - cut_weight(g, y), 1e-9);
    }
}

TEST(SpanningTreeRounding, IntegralPointReproducesCut) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 50; ++it) {
        const auto g = build_graph(oracle::random_maxcut(rng, 5 + rng() % 10, 0.5, -5, 5));
        Assignment y(g.vertex_count());
        for (auto& s : y) s = rng() & 1U;
        std::vector<double> x(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) x[e] = y[g.edge(e).u] != y[g.edge(e).v] ? 1.0 : 0.0;
        // rounding then local search can only improve on the given cut
        EXPECT_GE(spanning_tree_rounding(g, x).weight, cut_weight(g, y) - 1e-9);
    }
}

TEST(SpanningTreeRounding, Examples) {
    const auto tri = from_text(kTriangle);
    EXPECT_GE(spanning_tree_rounding(tri, std::vector<double>(3, 0.5)).weight, 0.0);
    const auto c5 = from_text(kFiveCycle);
    EXPECT_DOUBLE_EQ(spanning_tree_rounding(c5, std::vector<double>(5, 0.9)).weight, 4.0);
}

TEST(AngularEnergy, Examples) {
    const auto g = from_text(kTriangle);
    const std::vector<double> aligned(3, 0.0);
    EXPECT_NEAR(angular_energy(g, aligned), 3.0, 1e-12);
    const double t = 2 * std::numbers::pi / 3;
    const std::vector<double> spread{0.0, t, 2 * t};
    EXPECT_NEAR(angular_energy(g, spread), -1.5, 1e-12);
}

}  // namespace
}  // namespace mcbc
