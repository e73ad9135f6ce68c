/*
 * Copyright 2026 The fermicap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @brief Parameter sweeps over one-parameter channel families, written as CSV.
 *
 * Families:
 *   plus      b_p = b
 *   times     b_p = b^{p/n}
 *   explicit  one full coefficient list per grid point
 *
 * CSV columns: b, family, n, smin_found, smin_gaussian, deviation,
 * restarts_agreeing, wall_time_ms. Reals carry 12 significant digits.
 */

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fermicap/capacity.hpp"
#include "fermicap/channel.hpp"
#include "fermicap/error.hpp"
#include "fermicap/minimizer.hpp"

namespace fermicap {

enum class Family { Plus, Times, Explicit };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::Plus: return "plus";
        case Family::Times: return "times";
        case Family::Explicit: return "explicit";
    }
    return "unknown";
}

inline std::optional<Family> parse_family(std::string_view s) {
    if (s == "plus") return Family::Plus;
    if (s == "times") return Family::Times;
    if (s == "explicit") return Family::Explicit;
    return std::nullopt;
}

/// Coefficients of the plus or times family at parameter b.
inline std::vector<double> family_coefficients(Family f, int n, double b) {
    require(f != Family::Explicit, ErrorKind::InvalidConfig, "explicit family has no parametrization");
    require(n >= 1, ErrorKind::InvalidConfig, "n must be positive");
    require(b >= 0.0 && b <= 1.0, ErrorKind::OutOfRange, "family parameter " + std::to_string(b) + " outside [0, 1]");
    std::vector<double> c(2 * n, b);
    if (f == Family::Times)
        for (int p = 1; p <= 2 * n; ++p) c[p - 1] = std::pow(b, static_cast<double>(p) / n);
    return c;
}

/// 0.05, 0.10, ..., 0.90; `full` continues to 0.95 and adds 0.99.
inline std::vector<double> default_grid(bool full = false) {
    std::vector<double> g;
    const int last = full ? 19 : 18;
    for (int k = 1; k <= last; ++k) g.push_back(0.05 * k);
    if (full) g.push_back(0.99);
    return g;
}

struct SweepSpec {
    Family family = Family::Plus;
    int n = 3;
    std::vector<double> b_grid;                  // plus / times
    std::vector<std::vector<double>> explicit_b;  // explicit, one list per point
    MinimizerConfig minimizer;
    std::string output_path;

    std::size_t points() const { return family == Family::Explicit ? explicit_b.size() : b_grid.size(); }

    void validate() const {
        minimizer.validate();
        require(n >= 1 && n <= kMaxModes, ErrorKind::InvalidConfig, "n must lie in [1, 5]");
        if (family == Family::Explicit) {
            require(!explicit_b.empty(), ErrorKind::InvalidConfig, "explicit sweep needs at least one b list");
            for (const auto& b : explicit_b) {
                require(b.size() == 2 * static_cast<std::size_t>(n), ErrorKind::InvalidConfig,
                        "explicit b list of length " + std::to_string(b.size()) + " for n = " + std::to_string(n));
                check_coefficients(b);
            }
        } else {
            require(!b_grid.empty(), ErrorKind::InvalidConfig, "empty b grid");
            for (double b : b_grid)
                require(b >= 0.0 && b <= 1.0, ErrorKind::InvalidConfig,
                        "grid value " + std::to_string(b) + " outside [0, 1]");
        }
    }
};

struct SweepRow {
    double b = 0.0;  // grid parameter; the point index for the explicit family
    Family family = Family::Plus;
    int n = 0;
    double smin_found = 0.0;
    double smin_gaussian = 0.0;
    double deviation = 0.0;
    int restarts_agreeing = 0;
    double wall_time_ms = 0.0;
};

inline constexpr std::string_view kSweepHeader =
    "b,family,n,smin_found,smin_gaussian,deviation,restarts_agreeing,wall_time_ms";

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string format_row(const SweepRow& r) {
    std::string s;
    s += format_real(r.b) + ',' + std::string(to_string(r.family)) + ',' + std::to_string(r.n) + ',';
    s += format_real(r.smin_found) + ',' + format_real(r.smin_gaussian) + ',' + format_real(r.deviation) + ',';
    s += std::to_string(r.restarts_agreeing) + ',' + format_real(r.wall_time_ms);
    return s;
}

/// Seed owned by grid point `index`.
inline std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
    return seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(index);
}

inline std::vector<double> point_coefficients(const SweepSpec& spec, std::size_t index) {
    return spec.family == Family::Explicit ? spec.explicit_b[index]
                                           : family_coefficients(spec.family, spec.n, spec.b_grid[index]);
}

inline SweepRow run_point(const SweepSpec& spec, std::size_t index) {
    const auto b = point_coefficients(spec, index);
    const FermionicProductChannel ch(spec.n, b);
    MinimizerConfig cfg = spec.minimizer;
    cfg.seed = point_seed(spec.minimizer.seed, index);

    const auto start = std::chrono::steady_clock::now();
    const MinimizerRun run = minimize(ch, cfg);
    const auto stop = std::chrono::steady_clock::now();

    SweepRow row;
    row.b = spec.family == Family::Explicit ? static_cast<double>(index) : spec.b_grid[index];
    row.family = spec.family;
    row.n = spec.n;
    row.smin_found = run.best_entropy;
    row.smin_gaussian = smin_gaussian(b);
    row.deviation = row.smin_found - row.smin_gaussian;
    row.restarts_agreeing = run.restarts_agreeing();
    row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return row;
}

/**
 * Runs every grid point in order, writing the header and then each row as soon
 * as it is finished, so an interrupted sweep leaves a valid prefix behind.
 */
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::ostream& out,
                                       const std::function<void(const SweepRow&)>& on_row = {}) {
    spec.validate();
    out << kSweepHeader << '\n' << std::flush;
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < spec.points(); ++i) {
        rows.push_back(run_point(spec, i));
        out << format_row(rows.back()) << '\n' << std::flush;
        if (on_row) on_row(rows.back());
    }
    return rows;
}

}  // namespace fermicap
