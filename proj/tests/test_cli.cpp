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


// Runs the mcbc executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <string>

#include "mcbc/instance_io.hpp"
#include "mcbc/transform.hpp"
#include "oracle.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
 protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mcbc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    RunResult run(const std::string& args, const std::string& env = "") const {
        const auto err = dir_ / "stderr.txt";
        const std::string cmd = env + " '" MCBC_CLI_PATH "' " + args + " 2>'" + err.string() + "'";
        RunResult r;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (pipe == nullptr) return r;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
        const int status = pclose(pipe);
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.err = slurp(err);
        return r;
    }

    static std::string sample(const char* name) { return std::string("'") + MCBC_SAMPLES_DIR + "/" + name + "'"; }

    fs::path write(const std::string& name, const std::string& body) const {
        const auto p = dir_ / name;
        std::ofstream(p) << body;
        return p;
    }

    fs::path dir_;
};

TEST_F(Cli, TriangleText) {
    const auto r = run(sample("tri.mc"));
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("problem: maxcut"), std::string::npos);
    EXPECT_NE(r.out.find("status: optimal"), std::string::npos);
    EXPECT_NE(r.out.find("best_value: 2\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("partition:"), std::string::npos);
}

TEST_F(Cli, QuboWithExplicitFormat) {
    const auto r = run("--format bq " + sample("q.bq"));
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("problem: qubo"), std::string::npos);
    EXPECT_NE(r.out.find("best_value: -1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("partition: 1\n"), std::string::npos) << r.out;
}

TEST_F(Cli, FormatSniffedWithoutExtension) {
    const auto q = write("instance.txt", "2 3\n1 1 -2\n2 2 -2\n1 2 3\n");
    const auto r = run("--output-format json '" + q.string() + "'");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto rep = mcbc::read_report_json(r.out);
    EXPECT_EQ(rep.problem, mcbc::ProblemKind::qubo);
    EXPECT_DOUBLE_EQ(rep.best_value, -2.0);
}

TEST_F(Cli, JsonReportMatchesBruteForce) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 5; ++it) {
        const auto raw = oracle::random_maxcut(rng, 12, 0.5, -5, 5);
        const auto p = write("g.mc", mcbc::write_maxcut(raw));
        const auto r = run("--output-format json '" + p.string() + "'");
        ASSERT_EQ(r.exit_code, 0) << r.err;
        const auto rep = mcbc::read_report_json(r.out);
        const auto g = mcbc::build_graph(raw);
        EXPECT_EQ(rep.status, mcbc::SolveStatus::optimal);
        EXPECT_DOUBLE_EQ(rep.best_value, oracle::max_cut(g));
        EXPECT_DOUBLE_EQ(rep.dual_bound, rep.best_value);
        ASSERT_EQ(rep.partition.size(), 12U);
        EXPECT_DOUBLE_EQ(oracle::cut_value(g, rep.partition), rep.best_value);
    }
}

TEST_F(Cli, QuboMatchesBruteForce) {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 5; ++it) {
        const auto q = oracle::random_qubo(rng, 8, 0.5, -5, 5);
        const auto p = write("q.bq", mcbc::write_qubo(q));
        const auto r = run("--threads 2 --output-format json '" + p.string() + "'");
        ASSERT_EQ(r.exit_code, 0) << r.err;
        const auto rep = mcbc::read_report_json(r.out);
        EXPECT_DOUBLE_EQ(rep.best_value, oracle::qubo_min(q));
        EXPECT_DOUBLE_EQ(oracle::qubo_value(q, rep.partition), rep.best_value);
    }
}

TEST_F(Cli, WriteSolutionAndOut) {
    const auto sol = dir_ / "sol.txt";
    const auto out = dir_ / "report.json";
    const auto r = run("--output-format json --out '" + out.string() + "' --write-solution '" + sol.string() + "' " +
                       sample("two_triangles.mc"));
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const auto rep = mcbc::read_report_json(slurp(out));
    EXPECT_DOUBLE_EQ(rep.best_value, 5.0);
    std::istringstream in(slurp(sol));
    std::vector<std::uint8_t> y;
    int v;
    while (in >> v) y.push_back(static_cast<std::uint8_t>(v));
    EXPECT_EQ(y, rep.partition);
}

TEST_F(Cli, TimeLimitExitsWithTwo) {
    std::mt19937_64 rng(40);
    const auto p = write("hard.mc", mcbc::write_maxcut(oracle::random_pm1(rng, 30, 0.9)));
    const auto r = run("--time-limit 1 --output-format json '" + p.string() + "'");
    ASSERT_EQ(r.exit_code, 2) << r.err;
    const auto rep = mcbc::read_report_json(r.out);
    EXPECT_EQ(rep.status, mcbc::SolveStatus::time_limit);
    EXPECT_GT(rep.primal_dual_gap_percent, 0.0);
    EXPECT_GE(rep.dual_bound, rep.best_value);
}

TEST_F(Cli, ErrorsExitWithOne) {
    EXPECT_EQ(run("--no-such-flag " + sample("tri.mc")).exit_code, 1);
    EXPECT_EQ(run("'" + (dir_ / "missing.mc").string() + "'").exit_code, 1);
    EXPECT_EQ(run("").exit_code, 1);
    const auto bad = write("bad.mc", "3 2\n1 2 1\n");
    const auto r = run("'" + bad.string() + "'");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(Cli, HelpExitsWithZero) {
    const auto r = run("--help");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("--time-limit"), std::string::npos);
}

TEST_F(Cli, InfoLogReportsRounds) {
    std::mt19937_64 rng(7);
    const auto p = write("g.mc", mcbc::write_maxcut(oracle::random_pm1(rng, 25, 0.3)));
    const auto r = run("--enum-threshold 0 '" + p.string() + "'", "SOLVER_LOG=info");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const std::regex line(R"(round [0-9]+: dual=[-0-9.e+]+, primal=[-0-9.e+]+, cuts=\+[0-9]+, time=[0-9.]+)");
    EXPECT_TRUE(std::regex_search(r.err, line)) << r.err;
    // quiet by default
    EXPECT_TRUE(run("--enum-threshold 0 '" + p.string() + "'").err.empty());
    // the flag overrides the environment
    EXPECT_TRUE(run("--log quiet --enum-threshold 0 '" + p.string() + "'", "SOLVER_LOG=info").err.empty());
}

TEST_F(Cli, PresolveStatsOnStderr) {
    const auto r = run("--presolve-stats " + sample("two_triangles.mc"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.err.find("presolve: rounds="), std::string::npos) << r.err;
}

TEST_F(Cli, SolverFlagsKeepOptimum) {
    const std::string flags[] = {"--no-presolve",          "--heur-off",         "--no-propagation",
                                 "--sepa-contract-zeros",  "--heur-restarts 0",  "--sepa-triangle-budget 0",
                                 "--sepa-max-cuts-per-round 2", "--seed 9 --threads 3", "--gap 0"};
    std::mt19937_64 rng(8);
    const auto raw = oracle::random_maxcut(rng, 16, 0.5, -5, 5);
    const double opt = oracle::max_cut(mcbc::build_graph(raw));
    const auto p = write("g.mc", mcbc::write_maxcut(raw));
    for (const auto& f : flags) {
        const auto r = run("--enum-threshold 0 --output-format json " + f + " '" + p.string() + "'");
        ASSERT_EQ(r.exit_code, 0) << f << ": " << r.err;
        EXPECT_DOUBLE_EQ(mcbc::read_report_json(r.out).best_value, opt) << f;
    }
}

}  // namespace
