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

// mcbc: solve a MaxCut (.mc) or QUBO (.bq) instance to optimality.
//
// Exit status: 0 optimal, 2 a limit was hit (time, nodes, gap), 1 error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mcbc/mcbc.hpp"

namespace {

enum class InputFormat { mc, bq, automatic };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Both formats share the "n m" / "a b value" layout. A diagonal entry (i i q)
// is only legal in QUBO files, where it is also very common.
InputFormat sniff(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        const auto t = mcbc::detail::trim(line);
        if (t.empty() || t[0] == '#' || t[0] == '%') continue;
        if (header) {
            header = false;
            continue;
        }
        const auto tok = mcbc::detail::split_ws(t);
        if (tok.size() >= 2 && tok[0] == tok[1]) return InputFormat::bq;
    }
    return InputFormat::mc;
}

InputFormat detect(const std::string& path, const std::string& text, InputFormat requested) {
    if (requested != InputFormat::automatic) return requested;
    if (ends_with(path, ".mc")) return InputFormat::mc;
    if (ends_with(path, ".bq")) return InputFormat::bq;
    return sniff(text);
}

void print_presolve_stats(const mcbc::SolveResult& r, std::ostream& os) {
    const auto& s = r.presolve;
    os << "presolve: rounds=" << s.rounds << " edges_contracted=" << s.edges_contracted
       << " vertices_merged=" << s.vertices_merged << " dominating_edge=" << s.dominating_edge_hits
       << " triangle_zero=" << s.triangle_zero_hits << " triangle_one=" << s.triangle_one_hits
       << " symmetry=" << s.symmetry_hits << " time=" << s.elapsed_s << "s blocks=" << r.blocks
       << " enumerated_blocks=" << r.enumerated_blocks << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact branch-and-cut solver for MaxCut and QUBO"};
    std::string input;
    std::string format_name = "auto";
    std::string output_format = "text";
    std::string out_path;
    std::string solution_path;
    std::string log_level;
    bool presolve_stats = false;
    bool heur_off = false;
    bool no_propagation = false;
    bool no_presolve = false;
    mcbc::SolverConfig cfg;

    app.add_option("input", input, "instance file (.mc MaxCut edge list or .bq QUBO triplets)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--format", format_name, "input format (auto: by extension, else by content)")
        ->check(CLI::IsMember({"mc", "bq", "auto"}, CLI::ignore_case));
    app.add_option("--output-format", output_format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    app.add_option("--write-solution", solution_path, "write the 0/1 solution vector, one entry per line");
    app.add_option("--time-limit", cfg.time_limit_s, "time limit in seconds")->check(CLI::PositiveNumber);
    app.add_option("--gap", cfg.gap_percent, "relative gap (percent) at which to stop")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", cfg.threads, "racing workers (1 = single-threaded solve)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--enum-threshold", cfg.enum_threshold, "enumerate blocks with at most this many vertices")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--node-limit", cfg.node_limit, "branch-and-bound node limit (< 0: none)");
    app.add_flag("--presolve-stats", presolve_stats, "print presolve statistics to stderr");
    app.add_flag("--no-presolve", no_presolve, "disable presolve reductions");
    app.add_flag("--sepa-contract-zeros", cfg.sepa.contract_zeros, "contract zero-length auxiliary arcs");
    app.add_option("--sepa-triangle-budget", cfg.sepa.triangle_budget, "triangles examined per round");
    app.add_option("--sepa-max-cuts-per-round", cfg.sepa.max_cuts_per_round, "cut cap per round (< 0: 2|V|)");
    app.add_option("--heur-restarts", cfg.heur_restarts, "rank-two heuristic restarts at the root")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--heur-off", heur_off, "disable primal heuristics");
    app.add_flag("--no-propagation", no_propagation, "disable reduced-cost fixing");
    app.add_option("--log", log_level, "quiet, info or debug (default: SOLVER_LOG, else quiet)")
        ->check(CLI::IsMember({"quiet", "info", "debug"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    cfg.heuristics = !heur_off;
    cfg.propagation = !no_propagation;
    cfg.presolve = !no_presolve;
    cfg.log.level = log_level.empty() ? mcbc::log_level_from_env(mcbc::LogLevel::quiet)
                                      : mcbc::parse_log_level(log_level);
    cfg.log.out = &std::cerr;

    try {
        const auto text = read_file(input);
        const auto requested = format_name == "mc"   ? InputFormat::mc
                               : format_name == "bq" ? InputFormat::bq
                                                     : InputFormat::automatic;
        const auto fmt = detect(input, text, requested);

        mcbc::ResultReport report;
        mcbc::SolveResult res;
        if (fmt == InputFormat::mc) {
            const auto raw = mcbc::parse_maxcut(text);
            const auto g = mcbc::build_graph(raw);
            res = mcbc::racing_solve(g, cfg, cfg.threads);
            report.problem = mcbc::ProblemKind::maxcut;
            report.best_value = res.value;
            report.dual_bound = res.dual_bound;
            report.partition = res.sides;
        } else {
            const auto q = mcbc::parse_qubo(text);
            const auto [raw, cert] = mcbc::qubo_to_maxcut(q);
            const auto g = mcbc::build_graph(raw);
            res = mcbc::racing_solve(g, cfg, cfg.threads);
            report.problem = mcbc::ProblemKind::qubo;
            report.partition = mcbc::sides_to_qubo(res.sides, cert.root_vertex);
            // f(x) = offset - cut(y); recomputed directly as a certificate check
            report.best_value = mcbc::qubo_objective(q, report.partition);
            const double via_cut = cert.constant_offset - res.value;
            if (std::abs(report.best_value - via_cut) > 1e-6 * std::max(1.0, std::abs(via_cut)))
                throw std::logic_error("QUBO objective does not match the transformed cut value");
            report.dual_bound = cert.constant_offset - res.dual_bound;
        }
        report.status = res.status;
        report.primal_dual_gap_percent = res.gap_percent;
        report.bnb_nodes = res.nodes;
        report.wall_time_s = res.wall_time_s;

        if (presolve_stats) print_presolve_stats(res, std::cerr);

        const auto body =
            mcbc::write_report(report, output_format == "json" ? mcbc::ReportFormat::json : mcbc::ReportFormat::text);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path);
            if (!(out << body)) throw std::runtime_error("cannot write '" + out_path + "'");
        }
        if (!solution_path.empty()) {
            std::ofstream sol(solution_path);
            for (auto v : report.partition) sol << static_cast<int>(v) << '\n';
            if (!sol) throw std::runtime_error("cannot write '" + solution_path + "'");
        }
        return res.status == mcbc::SolveStatus::optimal ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
