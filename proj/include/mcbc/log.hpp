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

/// \file log.hpp
/// \brief Minimal leveled logging to a stream; level from SOLVER_LOG.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <string_view>

namespace mcbc {

enum class LogLevel { quiet, info, debug };

inline LogLevel parse_log_level(std::string_view s, LogLevel fallback = LogLevel::info) {
    if (s == "quiet") return LogLevel::quiet;
    if (s == "info") return LogLevel::info;
    if (s == "debug") return LogLevel::debug;
    return fallback;
}

inline LogLevel log_level_from_env(LogLevel fallback = LogLevel::info) {
    const char* v = std::getenv("SOLVER_LOG");
    return v == nullptr ? fallback : parse_log_level(v, fallback);
}

struct Logger {
    LogLevel level = LogLevel::quiet;
    std::ostream* out = &std::clog;

    bool enabled(LogLevel l) const { return out != nullptr && level >= l && l != LogLevel::quiet; }

    void write(LogLevel l, std::string_view msg) const {
        if (!enabled(l)) return;
        static std::mutex m;
        std::lock_guard<std::mutex> lock(m);
        *out << msg << '\n';
    }
    void info(std::string_view msg) const { write(LogLevel::info, msg); }
    void debug(std::string_view msg) const { write(LogLevel::debug, msg); }
};

/// printf-style formatting into a std::string.
template <class... Args>
std::string strprintf(const char* fmt, Args... args) {
    const int n = std::snprintf(nullptr, 0, fmt, args...);
    std::string s(static_cast<std::size_t>(n > 0 ? n : 0), '\0');
    if (n > 0) std::snprintf(s.data(), s.size() + 1, fmt, args...);
    return s;
}

}  // namespace mcbc
