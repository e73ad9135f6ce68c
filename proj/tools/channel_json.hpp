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
 * @brief JSON input and output for the command-line tool.
 *
 * Channel:  {"n": 2, "b": [0.9, 0.8, 0.7, 0.6]}
 * Sweep:    {"family": "plus", "n": 3, "b_grid": [0.1, 0.2],
 *            "b": [[...], ...]            (explicit family only),
 *            "minimizer": {"iterations": 64, "restarts": 16, "seed": 1},
 *            "output_path": "sweep.csv"}
 */

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermicap/capacity.hpp"
#include "fermicap/minimizer.hpp"
#include "fermicap/sweep.hpp"
#include "fermicap/verify.hpp"

namespace fermicap::cli {

using nlohmann::json;

/// Malformed user input; `field` names the offending JSON field or flag.
class InputError : public std::runtime_error {
public:
    InputError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct ChannelSpec {
    int n = 0;
    std::vector<double> b;
};

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path, std::string("malformed JSON (") + e.what() + ")");
    }
}

namespace detail {

inline int get_int(const json& j, const std::string& field, int lo, int hi) {
    if (!j.contains(field)) throw InputError(field, "missing");
    const json& v = j.at(field);
    if (!v.is_number_integer()) throw InputError(field, "expected an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi)
        throw InputError(field, std::to_string(x) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(x);
}

inline std::vector<double> get_unit_interval_list(const json& v, const std::string& field) {
    if (!v.is_array()) throw InputError(field, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string where = field + "[" + std::to_string(i) + "]";
        if (!v[i].is_number()) throw InputError(where, "expected a number");
        const double x = v[i].get<double>();
        if (!(x >= 0.0 && x <= 1.0)) throw InputError(where, std::to_string(x) + " outside [0, 1]");
        out.push_back(x);
    }
    return out;
}

}  // namespace detail

inline ChannelSpec parse_channel(const json& j) {
    if (!j.is_object()) throw InputError("channel", "expected a JSON object");
    ChannelSpec spec;
    spec.n = detail::get_int(j, "n", 1, kMaxModes);
    if (!j.contains("b")) throw InputError("b", "missing");
    spec.b = detail::get_unit_interval_list(j.at("b"), "b");
    if (spec.b.size() != 2 * static_cast<std::size_t>(spec.n))
        throw InputError("b", "expected 2n = " + std::to_string(2 * spec.n) + " entries, got " +
                                  std::to_string(spec.b.size()));
    return spec;
}

inline MinimizerConfig parse_minimizer(const json& j, MinimizerConfig cfg = {}) {
    if (!j.is_object()) throw InputError("minimizer", "expected a JSON object");
    const auto real = [&](const char* key, double& target) {
        if (!j.contains(key)) return;
        if (!j.at(key).is_number() || !(j.at(key).get<double>() > 0.0))
            throw InputError(std::string("minimizer.") + key, "expected a positive number");
        target = j.at(key).get<double>();
    };
    if (j.contains("iterations")) cfg.iterations = detail::get_int(j, "iterations", 1, 1 << 20);
    if (j.contains("restarts")) cfg.restarts = detail::get_int(j, "restarts", 1, 1 << 20);
    if (j.contains("threads")) cfg.threads = detail::get_int(j, "threads", 1, 1024);
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) throw InputError("minimizer.seed", "expected a non-negative integer");
        cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    real("convergence_tol", cfg.convergence_tol);
    real("degeneracy_tol", cfg.degeneracy_tol);
    real("log_floor", cfg.log_floor);
    return cfg;
}

inline SweepSpec parse_sweep(const json& j) {
    if (!j.is_object()) throw InputError("sweep", "expected a JSON object");
    SweepSpec spec;
    if (!j.contains("family") || !j.at("family").is_string()) throw InputError("family", "expected a string");
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw InputError("family", "expected plus, times or explicit");
    spec.family = *family;
    spec.n = detail::get_int(j, "n", 1, kMaxModes);
    if (spec.family == Family::Explicit) {
        if (!j.contains("b") || !j.at("b").is_array()) throw InputError("b", "explicit family needs a list of b lists");
        for (std::size_t i = 0; i < j.at("b").size(); ++i) {
            const std::string where = "b[" + std::to_string(i) + "]";
            auto list = detail::get_unit_interval_list(j.at("b")[i], where);
            if (list.size() != 2 * static_cast<std::size_t>(spec.n))
                throw InputError(where, "expected 2n = " + std::to_string(2 * spec.n) + " entries");
            spec.explicit_b.push_back(std::move(list));
        }
    } else {
        spec.b_grid = j.contains("b_grid") ? detail::get_unit_interval_list(j.at("b_grid"), "b_grid") : default_grid();
    }
    if (j.contains("minimizer")) spec.minimizer = parse_minimizer(j.at("minimizer"));
    if (j.contains("output_path")) {
        if (!j.at("output_path").is_string()) throw InputError("output_path", "expected a string");
        spec.output_path = j.at("output_path").get<std::string>();
    }
    return spec;
}

/// Comma-separated list of reals, as given to --b-grid.
inline std::vector<double> parse_real_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            throw InputError(flag, "'" + item + "' is not a number");
        if (!(v >= 0.0 && v <= 1.0)) throw InputError(flag, item + " outside [0, 1]");
        out.push_back(v);
    }
    if (out.empty()) throw InputError(flag, "empty list");
    return out;
}

// ---------------------------------------------------------------------------

inline json to_json(const CapacityReport& r) {
    return {{"n", r.n},
            {"b_sorted", r.sorted_b},
            {"smin_even", r.smin_even},
            {"smin_gaussian", r.smin_gaussian},
            {"c1_gaussian", r.c1_gaussian}};
}

inline json to_json(const MinimizerRun& run, std::optional<double> smin_g) {
    json traces = json::array();
    for (const auto& t : run.traces)
        traces.push_back({{"seed", t.seed}, {"entropies", t.entropies}, {"floor_active", t.floor_active}});
    json j{{"best_entropy", run.best_entropy},
           {"best_restart", run.best_restart},
           {"restarts", run.traces.size()},
           {"restarts_agreeing", run.restarts_agreeing()},
           {"dispersion", run.worst_entropy() - run.best_entropy},
           {"floor_active", run.any_floor_active()},
           {"iterations", run.config.iterations},
           {"seed", run.config.seed},
           {"traces", traces}};
    if (smin_g) {
        j["smin_gaussian"] = *smin_g;
        j["deviation"] = run.best_entropy - *smin_g;
    }
    if (run.gaussian_witness)
        j["gaussian_witness"] = {{"singular_values", run.gaussian_witness->singular_values},
                                 {"deviation", run.gaussian_witness->deviation}};
    return j;
}

inline json to_json(const PropertyResult& p) {
    return {{"suite", p.suite},       {"name", p.name},           {"trials", p.trials},
            {"failures", p.failures}, {"worst_error", p.worst_error}, {"tolerance", p.tolerance},
            {"informational", p.informational}, {"passed", p.passed()}};
}

}  // namespace fermicap::cli
