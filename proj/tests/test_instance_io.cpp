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

#include "mcbc/instance_io.hpp"
#include "oracle.hpp"

namespace mcbc {
namespace {

TEST(ParseMaxCut, UnitTriangle) {
    const auto inst = parse_maxcut("3 3\n1 2 1\n2 3 1\n1 3 1");
    EXPECT_EQ(inst.num_vertices, 3);
    ASSERT_EQ(inst.edges.size(), 3u);
    for (const auto& e : inst.edges) EXPECT_EQ(e.w, 1.0);
    EXPECT_TRUE(inst.all_integral);
}

TEST(ParseMaxCut, DuplicatesAreSummed) {
    const auto inst = parse_maxcut("2 2\n1 2 2\n1 2 3");
    ASSERT_EQ(inst.edges.size(), 1u);
    EXPECT_EQ(inst.edges[0].w, 5.0);
}

TEST(ParseMaxCut, ReversedDuplicateIsMerged) {
    const auto inst = parse_maxcut("2 2\n1 2 2\n2 1 -2.5");
    ASSERT_EQ(inst.edges.size(), 1u);
    EXPECT_DOUBLE_EQ(inst.edges[0].w, -0.5);
    EXPECT_FALSE(inst.all_integral);
}

TEST(ParseMaxCut, SelfLoopRejected) {
    try {
        parse_maxcut("2 1\n1 1 4");
        FAIL() << "self-loop accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
}

TEST(ParseMaxCut, CommentsIgnored) {
    const auto inst = parse_maxcut("# header follows\n% another\n3 2\n1 2 1\n# mid\n2 3 -1\n");
    EXPECT_EQ(inst.edges.size(), 2u);
}

TEST(ParseMaxCut, Errors) {
    EXPECT_THROW(parse_maxcut("3 2\n1 2 1\n"), ParseError);        // count mismatch
    EXPECT_THROW(parse_maxcut("3 1\n1 2\n"), ParseError);          // malformed line
    EXPECT_THROW(parse_maxcut("3 1\n1 4 1\n"), ParseError);        // out of range
    EXPECT_THROW(parse_maxcut("3 1\n1 2 abc\n"), ParseError);      // bad weight
    EXPECT_THROW(parse_maxcut(""), ParseError);                    // empty
    try {
        parse_maxcut("3 2\n1 2 1\n2 x 1\n");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseQubo, Examples) {
    const auto a = parse_qubo("1 1\n1 1 -1");
    EXPECT_EQ(a.dimension, 1);
    ASSERT_EQ(a.entries.size(), 1u);
    EXPECT_EQ(a.entries[0].q, -1.0);

    const auto b = parse_qubo("2 3\n1 1 1\n2 2 1\n1 2 -3");
    EXPECT_EQ(b.dimension, 2);
    EXPECT_EQ(b.entries.size(), 3u);

    EXPECT_THROW(parse_qubo("2 1\n3 1 1"), ParseError);
    EXPECT_THROW(parse_qubo("2 2\n1 1 1"), ParseError);
}

TEST(ParseMaxCut, WriteParseIsIdempotent) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto raw = oracle::random_maxcut(rng, 8, 0.5, -5, 5);
        const auto once = parse_maxcut(write_maxcut(raw));
        const auto twice = parse_maxcut(write_maxcut(once));
        EXPECT_EQ(once, twice);
    }
    const auto frac = parse_maxcut("3 2\n1 2 0.1\n2 3 -1e-3\n");
    EXPECT_EQ(parse_maxcut(write_maxcut(frac)), frac);
}

TEST(Report, TextForOptimalTriangle) {
    ResultReport r;
    r.best_value = 2;
    r.dual_bound = 2;
    r.partition = {0, 0, 1};
    const auto text = write_report(r, ReportFormat::text);
    EXPECT_NE(text.find("status: optimal"), std::string::npos);
    EXPECT_NE(text.find("best_value: 2"), std::string::npos);
    EXPECT_NE(text.find("partition: 0 0 1"), std::string::npos);
}

TEST(Report, TimeLimitedGapField) {
    ResultReport r;
    r.status = SolveStatus::time_limit;
    r.best_value = 10;
    r.dual_bound = 12;
    r.primal_dual_gap_percent = 20;
    const auto j = nlohmann::json::parse(write_report(r, ReportFormat::json));
    EXPECT_GT(j.at("primal_dual_gap_percent").get<double>(), 0.0);
    EXPECT_EQ(j.at("status"), "time_limit");
}

TEST(Report, JsonRoundTrip) {
    ResultReport r;
    r.problem = ProblemKind::qubo;
    r.status = SolveStatus::gap_limit;
    r.best_value = -17.25;
    r.dual_bound = -18;
    r.primal_dual_gap_percent = 4.347826086956522;
    r.bnb_nodes = 42;
    r.wall_time_s = 0.123456789;
    r.partition = {1, 0, 1, 1};
    EXPECT_EQ(read_report_json(write_report(r, ReportFormat::json)), r);
}

TEST(Report, JsonKeyOrderIsFixed) {
    const auto s = write_report(ResultReport{}, ReportFormat::json);
    const char* keys[] = {"problem", "status", "best_value", "dual_bound", "primal_dual_gap_percent",
                          "bnb_nodes", "wall_time_s", "partition"};
    std::size_t pos = 0;
    for (const char* k : keys) {
        const auto at = s.find(std::string("\"") + k + "\"");
        ASSERT_NE(at, std::string::npos) << k;
        EXPECT_GT(at, pos);
        pos = at;
    }
    EXPECT_EQ(s, write_report(ResultReport{}, ReportFormat::json));
}

}  // namespace
}  // namespace mcbc
