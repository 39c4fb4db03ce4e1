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

#include <random>

#include "mcbc/graph.hpp"
#include "mcbc/transform.hpp"
#include "oracle.hpp"

namespace mcbc {
namespace {

// f(x) = offset - cut(y(x)) for every x
void expect_identity(const RawQuboInstance& q) {
    const auto [mc, cert] = qubo_to_maxcut(q);
    const auto g = build_graph(mc);
    ASSERT_EQ(g.vertex_count(), q.dimension + 1);
    for (std::uint64_t m = 0; m < (1ULL << q.dimension); ++m) {
        std::vector<std::uint8_t> x(q.dimension);
        for (VertexId i = 0; i < q.dimension; ++i) x[i] = (m >> i) & 1U;
        EXPECT_NEAR(oracle::qubo_value(q, x), cert.constant_offset - cut_weight(g, qubo_to_sides(x)), 1e-9);
    }
}

TEST(QuboToMaxCut, SingleNegativeDiagonal) {
    const auto q = parse_qubo("1 1\n1 1 -1");
    const auto [mc, cert] = qubo_to_maxcut(q);
    EXPECT_EQ(mc.num_vertices, 2);
    EXPECT_EQ(mc.edges.size(), 1u);
    EXPECT_EQ(cert.constant_offset - oracle::max_cut(build_graph(mc)), -1.0);
    expect_identity(q);
}

TEST(QuboToMaxCut, ZeroMatrix) {
    const auto q = parse_qubo("3 0\n");
    const auto [mc, cert] = qubo_to_maxcut(q);
    EXPECT_TRUE(mc.edges.empty());
    EXPECT_EQ(cert.constant_offset, 0.0);
}

TEST(QuboToMaxCut, AsymmetricTwoByTwo) {
    const auto q = parse_qubo("2 3\n1 1 1\n1 2 -3\n2 2 1");
    const auto [mc, cert] = qubo_to_maxcut(q);
    EXPECT_EQ(mc.num_vertices, 3);
    EXPECT_EQ(oracle::qubo_min(q), -1.0);
    EXPECT_EQ(cert.constant_offset - oracle::max_cut(build_graph(mc)), -1.0);
    expect_identity(q);
}

TEST(QuboToMaxCut, RandomIdentity) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; ++t) expect_identity(oracle::random_qubo(rng, 1 + static_cast<int>(rng() % 7), 0.5, -4, 4));
}

TEST(MaxCutToQubo, SingleEdge) {
    const auto g = parse_maxcut("2 1\n1 2 1");
    const auto [q, cert] = maxcut_to_qubo(g);
    EXPECT_EQ(q.dimension, 1);
    EXPECT_EQ(oracle::qubo_min(q), -1.0);
    EXPECT_EQ(cert.constant_offset - oracle::qubo_min(q), 1.0);
}

TEST(MaxCutToQubo, Triangle) {
    const auto g = parse_maxcut("3 3\n1 2 1\n2 3 1\n1 3 1");
    const auto [q, cert] = maxcut_to_qubo(g);
    EXPECT_EQ(q.dimension, 2);
    EXPECT_EQ(cert.constant_offset - oracle::qubo_min(q), 2.0);
}

TEST(MaxCutToQubo, Edgeless) {
    const auto [q, cert] = maxcut_to_qubo(parse_maxcut("3 0\n"));
    EXPECT_TRUE(q.entries.empty());
    EXPECT_EQ(cert.constant_offset, 0.0);
}

TEST(MaxCutToQubo, CutEqualsOffsetMinusQuboEverywhere) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        const auto raw = oracle::random_maxcut(rng, 2 + static_cast<int>(rng() % 8), 0.5, -5, 5);
        const auto g = build_graph(raw);
        const auto [q, cert] = maxcut_to_qubo(raw);
        for (std::uint64_t m = 0; m < (1ULL << (g.vertex_count() - 1)); ++m) {
            const auto y = oracle::assignment_from_mask(g.vertex_count(), m);
            const auto x = sides_to_qubo(y, 0);
            EXPECT_NEAR(cut_weight(g, y), cert.constant_offset - oracle::qubo_value(q, x), 1e-9);
        }
        EXPECT_NEAR(oracle::max_cut(g), cert.constant_offset - oracle::qubo_min(q), 1e-9);
    }
}

TEST(Transform, RoundTripPreservesMinimum) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; ++t) {
        const auto q = oracle::random_qubo(rng, 1 + static_cast<int>(rng() % 8), 0.4, -5, 5);
        const auto [mc, c1] = qubo_to_maxcut(q);
        const auto [q2, c2] = maxcut_to_qubo(mc);
        // min f = c1 - maxcut = c1 - (c2 - min f2)
        EXPECT_NEAR(oracle::qubo_min(q), c1.constant_offset - (c2.constant_offset - oracle::qubo_min(q2)), 1e-9);
    }
}

TEST(Transform, SidesRespectRoot) {
    const Assignment y{1, 0, 1, 1};
    EXPECT_EQ(sides_to_qubo(y, 0), (Assignment{1, 0, 0}));
    EXPECT_EQ(sides_to_qubo(qubo_to_sides(Assignment{0, 1, 1}), 0), (Assignment{0, 1, 1}));
}

}  // namespace
}  // namespace mcbc
