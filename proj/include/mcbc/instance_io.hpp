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

/// \file instance_io.hpp
/// \brief Readers and writers for edge-list MaxCut files, sparse-triplet QUBO
/// files, and solver result reports.
///
/// MaxCut format: first non-comment line "n m", then m lines "u v w" with
/// 1-based vertex ids. QUBO format: "n nnz" followed by nnz lines "i j q".
/// Lines whose first non-blank character is '#' or '%' are comments.

#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcbc/common.hpp"

namespace mcbc {

class ParseError : public std::runtime_error {
 public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number of the offending input line (0 for end of input).
    std::size_t line() const { return line_; }

 private:
    std::size_t line_;
};

struct RawEdge {
    VertexId u = 0;  // 1-based
    VertexId v = 0;  // 1-based
    double w = 0.0;

    friend bool operator==(const RawEdge&, const RawEdge&) = default;
};

struct RawMaxCutInstance {
    VertexId num_vertices = 0;
    std::vector<RawEdge> edges;
    bool all_integral = true;

    friend bool operator==(const RawMaxCutInstance&, const RawMaxCutInstance&) = default;
};

struct QuboEntry {
    VertexId i = 0;  // 1-based
    VertexId j = 0;  // 1-based
    double q = 0.0;

    friend bool operator==(const QuboEntry&, const QuboEntry&) = default;
};

struct RawQuboInstance {
    VertexId dimension = 0;
    std::vector<QuboEntry> entries;

    friend bool operator==(const RawQuboInstance&, const RawQuboInstance&) = default;
};

enum class SolveStatus { optimal, gap_limit, time_limit, infeasible_input };
enum class ProblemKind { maxcut, qubo };

struct ResultReport {
    ProblemKind problem = ProblemKind::maxcut;
    SolveStatus status = SolveStatus::optimal;
    /// Cut weight for MaxCut; QUBO minimum (original sense) for QUBO inputs.
    double best_value = 0.0;
    /// Bound on the optimum in the same sense as best_value.
    double dual_bound = 0.0;
    double primal_dual_gap_percent = 0.0;
    std::int64_t bnb_nodes = 0;
    double wall_time_s = 0.0;
    /// Vertex side (MaxCut) or variable value (QUBO), in input order.
    Assignment partition;

    friend bool operator==(const ResultReport&, const ResultReport&) = default;
};

enum class ReportFormat { json, text };

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        if (i >= s.size()) break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
    Int value{};
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    return value;
}

inline double parse_double(std::string_view tok, std::size_t line) {
    double value = 0.0;
    const auto* end = tok.data() + tok.size();
    const char* begin = tok.data();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ParseError(line, "malformed weight '" + std::string(tok) + "'");
    return value;
}

/// Non-comment, non-blank lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++lineno;
        const auto line = trim(raw);
        if (!line.empty() && line.front() != '#' && line.front() != '%') out.emplace_back(lineno, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

inline std::string format_number(double v) {
    if (v == 0.0) return "0";  // also folds -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace detail

/// Parses an edge-list MaxCut instance. Duplicate unordered pairs are merged
/// by summing their weights; the merged edge keeps the position of its first
/// occurrence.
inline RawMaxCutInstance parse_maxcut(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(0, "missing header 'n m'");
    const auto header = detail::split_ws(lines[0].second);
    if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n m'");
    const auto n = detail::parse_int<VertexId>(header[0], lines[0].first, "vertex count");
    const auto m = detail::parse_int<std::int64_t>(header[1], lines[0].first, "edge count");
    if (n <= 0) throw ParseError(lines[0].first, "vertex count must be positive");
    if (m < 0) throw ParseError(lines[0].first, "edge count must be nonnegative");
    if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
        throw ParseError(lines.size() > 1 ? lines.back().first : lines[0].first,
                         "header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
    }

    RawMaxCutInstance inst;
    inst.num_vertices = n;
    std::map<std::pair<VertexId, VertexId>, std::size_t> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto [lineno, line] = lines[k];
        const auto tok = detail::split_ws(line);
        if (tok.size() != 3) throw ParseError(lineno, "expected 'u v w'");
        const auto u = detail::parse_int<VertexId>(tok[0], lineno, "vertex id");
        const auto v = detail::parse_int<VertexId>(tok[1], lineno, "vertex id");
        const double w = detail::parse_double(tok[2], lineno);
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
        const auto key = std::minmax(u, v);
        if (auto it = seen.find(key); it != seen.end()) {
            inst.edges[it->second].w += w;
        } else {
            seen.emplace(key, inst.edges.size());
            inst.edges.push_back({u, v, w});
        }
    }
    for (const auto& e : inst.edges) inst.all_integral = inst.all_integral && is_integral_value(e.w);
    return inst;
}

inline RawQuboInstance parse_qubo(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(0, "missing header 'n nnz'");
    const auto header = detail::split_ws(lines[0].second);
    if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n nnz'");
    const auto n = detail::parse_int<VertexId>(header[0], lines[0].first, "dimension");
    const auto nnz = detail::parse_int<std::int64_t>(header[1], lines[0].first, "nonzero count");
    if (n <= 0) throw ParseError(lines[0].first, "dimension must be positive");
    if (nnz < 0) throw ParseError(lines[0].first, "nonzero count must be nonnegative");
    if (static_cast<std::int64_t>(lines.size()) - 1 != nnz) {
        throw ParseError(lines.size() > 1 ? lines.back().first : lines[0].first,
                         "header announces " + std::to_string(nnz) + " entries, found " +
                             std::to_string(lines.size() - 1));
    }
    RawQuboInstance inst;
    inst.dimension = n;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto [lineno, line] = lines[k];
        const auto tok = detail::split_ws(line);
        if (tok.size() != 3) throw ParseError(lineno, "expected 'i j q'");
        const auto i = detail::parse_int<VertexId>(tok[0], lineno, "index");
        const auto j = detail::parse_int<VertexId>(tok[1], lineno, "index");
        const double q = detail::parse_double(tok[2], lineno);
        if (i < 1 || i > n || j < 1 || j > n) throw ParseError(lineno, "index out of range");
        inst.entries.push_back({i, j, q});
    }
    return inst;
}

inline std::string write_maxcut(const RawMaxCutInstance& inst) {
    std::string out = std::to_string(inst.num_vertices) + " " + std::to_string(inst.edges.size()) + "\n";
    for (const auto& e : inst.edges)
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + detail::format_number(e.w) + "\n";
    return out;
}

inline std::string write_qubo(const RawQuboInstance& inst) {
    std::string out = std::to_string(inst.dimension) + " " + std::to_string(inst.entries.size()) + "\n";
    for (const auto& e : inst.entries)
        out += std::to_string(e.i) + " " + std::to_string(e.j) + " " + detail::format_number(e.q) + "\n";
    return out;
}

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::gap_limit: return "gap_limit";
        case SolveStatus::time_limit: return "time_limit";
        case SolveStatus::infeasible_input: return "infeasible_input";
    }
    return "unknown";
}

inline const char* to_string(ProblemKind p) { return p == ProblemKind::maxcut ? "maxcut" : "qubo"; }

inline SolveStatus status_from_string(std::string_view s) {
    if (s == "optimal") return SolveStatus::optimal;
    if (s == "gap_limit") return SolveStatus::gap_limit;
    if (s == "time_limit") return SolveStatus::time_limit;
    if (s == "infeasible_input") return SolveStatus::infeasible_input;
    throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

/// Serializes a report. JSON keys, in order: problem, status, best_value,
/// dual_bound, primal_dual_gap_percent, bnb_nodes, wall_time_s, partition.
inline std::string write_report(const ResultReport& r, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["problem"] = to_string(r.problem);
        j["status"] = to_string(r.status);
        j["best_value"] = r.best_value;
        j["dual_bound"] = r.dual_bound;
        j["primal_dual_gap_percent"] = r.primal_dual_gap_percent;
        j["bnb_nodes"] = r.bnb_nodes;
        j["wall_time_s"] = r.wall_time_s;
        auto part = nlohmann::ordered_json::array();
        for (auto s : r.partition) part.push_back(static_cast<int>(s));
        j["partition"] = std::move(part);
        return j.dump(2) + "\n";
    }
    std::string out;
    out += std::string("problem: ") + to_string(r.problem) + "\n";
    out += std::string("status: ") + to_string(r.status) + "\n";
    out += "best_value: " + detail::format_number(r.best_value) + "\n";
    out += "dual_bound: " + detail::format_number(r.dual_bound) + "\n";
    out += "primal_dual_gap_percent: " + detail::format_number(r.primal_dual_gap_percent) + "\n";
    out += "bnb_nodes: " + std::to_string(r.bnb_nodes) + "\n";
    out += "wall_time_s: " + detail::format_number(r.wall_time_s) + "\n";
    out += "partition:";
    for (auto s : r.partition) out += s ? " 1" : " 0";
    out += "\n";
    return out;
}

inline ResultReport read_report_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text);
    ResultReport r;
    r.problem = j.at("problem").get<std::string>() == "qubo" ? ProblemKind::qubo : ProblemKind::maxcut;
    r.status = status_from_string(j.at("status").get<std::string>());
    r.best_value = j.at("best_value").get<double>();
    r.dual_bound = j.at("dual_bound").get<double>();
    r.primal_dual_gap_percent = j.at("primal_dual_gap_percent").get<double>();
    r.bnb_nodes = j.at("bnb_nodes").get<std::int64_t>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    for (const auto& s : j.at("partition")) r.partition.push_back(static_cast<std::uint8_t>(s.get<int>() != 0));
    return r;
}

}  // namespace mcbc
