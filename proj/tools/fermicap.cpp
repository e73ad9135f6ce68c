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

// fermicap: capacities, minimum output entropy runs, family sweeps and
// property verification from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 numerics failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "channel_json.hpp"
#include "fermicap/capacity.hpp"
#include "fermicap/channel.hpp"
#include "fermicap/minimizer.hpp"
#include "fermicap/sweep.hpp"
#include "fermicap/verify.hpp"

namespace {

using namespace fermicap;
using cli::InputError;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerics = 3;

struct ChannelFlags {
    std::string channel_path;
    std::string family;
    int n = 0;
    std::optional<double> b;
    std::optional<double> depolarizing;
    int copies = 4;
};

struct MinimizerFlags {
    int iterations = 64;
    int restarts = 16;
    std::uint64_t seed = 0;
    int threads = 1;

    MinimizerConfig config() const {
        MinimizerConfig cfg;
        cfg.iterations = iterations;
        cfg.restarts = restarts;
        cfg.seed = seed;
        cfg.threads = threads;
        return cfg;
    }
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& f, bool allow_depolarizing) {
    cmd->add_option("--channel", f.channel_path, "Channel JSON file {\"n\": int, \"b\": [2n reals]}");
    cmd->add_option("--family", f.family, "Channel family: plus (b_p = b) or times (b_p = b^(p/n))");
    cmd->add_option("--n", f.n, "Number of modes for --family");
    cmd->add_option("--b", f.b, "Family parameter in [0, 1]");
    if (allow_depolarizing) {
        cmd->add_option("--depolarizing", f.depolarizing, "Per-Pauli error probability of a qubit depolarizing channel");
        cmd->add_option("--copies", f.copies, "Tensor copies of the depolarizing channel")->check(CLI::Range(1, 5));
    }
}

void add_minimizer_flags(CLI::App* cmd, MinimizerFlags& f) {
    cmd->add_option("--iterations", f.iterations, "Iteration cap per restart")->check(CLI::PositiveNumber);
    cmd->add_option("--restarts", f.restarts, "Independent random restarts")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Base seed; restart r uses seed + r");
    cmd->add_option("--threads", f.threads, "Worker threads for restarts")->check(CLI::PositiveNumber);
}

cli::ChannelSpec resolve_channel(const ChannelFlags& f) {
    const int sources = !f.channel_path.empty() + !f.family.empty();
    if (sources != 1) throw InputError("--channel/--family", "give exactly one of --channel or --family");
    if (!f.channel_path.empty()) return cli::parse_channel(cli::read_json_file(f.channel_path));
    const auto family = parse_family(f.family);
    if (!family || *family == Family::Explicit) throw InputError("--family", "expected plus or times");
    if (f.n < 1 || f.n > kMaxModes) throw InputError("--n", "expected an integer in [1, 5]");
    if (!f.b) throw InputError("--b", "required with --family");
    if (!(*f.b >= 0.0 && *f.b <= 1.0)) throw InputError("--b", "outside [0, 1]");
    return {f.n, family_coefficients(*family, f.n, *f.b)};
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_real(v[i]);
    return s;
}

// ---------------------------------------------------------------------------

int cmd_capacity(const ChannelFlags& f, bool as_json) {
    const auto spec = resolve_channel(f);
    const auto report = gaussian_capacity(spec.b);
    if (as_json) {
        std::cout << cli::to_json(report).dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "n              " << report.n << '\n'
              << "b (sorted)     " << join(report.sorted_b) << '\n'
              << "smin_even      " << format_real(report.smin_even) << '\n'
              << "smin_gaussian  " << format_real(report.smin_gaussian) << '\n'
              << "c1_gaussian    " << format_real(report.c1_gaussian) << '\n';
    return kExitOk;
}

void print_run(const MinimizerRun& run, std::optional<double> smin_g) {
    std::cout << "best_entropy       " << format_real(run.best_entropy) << '\n';
    if (smin_g) {
        std::cout << "smin_gaussian      " << format_real(*smin_g) << '\n'
                  << "deviation          " << format_real(run.best_entropy - *smin_g) << '\n';
    }
    std::cout << "restarts_agreeing  " << run.restarts_agreeing() << " / " << run.traces.size() << '\n'
              << "dispersion         " << format_real(run.worst_entropy() - run.best_entropy) << '\n'
              << "best_restart       " << run.best_restart << " (" << run.traces[run.best_restart].entropies.size() - 1
              << " iterations)\n";
    if (run.any_floor_active()) std::cout << "log_floor          active in at least one restart\n";
    if (run.gaussian_witness) {
        std::cout << "gaussian_witness   " << join(run.gaussian_witness->singular_values) << '\n'
                  << "witness_deviation  " << format_real(run.gaussian_witness->deviation) << '\n';
    }
}

int cmd_smin(const ChannelFlags& f, const MinimizerFlags& m, bool as_json) {
    const MinimizerConfig cfg = m.config();
    MinimizerRun run;
    std::optional<double> smin_g;
    if (f.depolarizing) {
        if (!f.channel_path.empty() || !f.family.empty())
            throw InputError("--depolarizing", "cannot be combined with --channel or --family");
        if (!(*f.depolarizing >= 0.0 && 3.0 * *f.depolarizing <= 1.0))
            throw InputError("--depolarizing", "probability outside [0, 1/3]");
        run = minimize(tensor_power(depolarizing_channel(*f.depolarizing), f.copies), cfg);
    } else {
        const auto spec = resolve_channel(f);
        run = minimize(FermionicProductChannel(spec.n, spec.b), cfg);
        smin_g = smin_gaussian(spec.b);
    }
    if (as_json)
        std::cout << cli::to_json(run, smin_g).dump(2) << '\n';
    else
        print_run(run, smin_g);
    return kExitOk;
}

struct SweepFlags {
    std::string spec_path;
    std::string family;
    int n = 3;
    std::string b_grid;
    bool full = false;
    std::string out;
};

int cmd_sweep(const SweepFlags& s, const MinimizerFlags& m, const CLI::App& app) {
    SweepSpec spec;
    if (!s.spec_path.empty()) {
        spec = cli::parse_sweep(cli::read_json_file(s.spec_path));
        // command-line minimizer flags override the file
        if (app.count("--iterations")) spec.minimizer.iterations = m.iterations;
        if (app.count("--restarts")) spec.minimizer.restarts = m.restarts;
        if (app.count("--seed")) spec.minimizer.seed = m.seed;
        if (app.count("--threads")) spec.minimizer.threads = m.threads;
    } else {
        const auto family = parse_family(s.family);
        if (!family || *family == Family::Explicit)
            throw InputError("--family", "expected plus or times (explicit sweeps need --spec)");
        spec.family = *family;
        if (s.n < 1 || s.n > kMaxModes) throw InputError("--n", "expected an integer in [1, 5]");
        spec.n = s.n;
        spec.b_grid = s.b_grid.empty() ? default_grid(s.full) : cli::parse_real_list(s.b_grid, "--b-grid");
        spec.minimizer = m.config();
    }
    if (!s.out.empty()) spec.output_path = s.out;
    try {
        spec.validate();
    } catch (const Error& e) {
        throw InputError("sweep", e.what());
    }

    std::ofstream file;
    if (!spec.output_path.empty()) {
        file.open(spec.output_path);
        if (!file) throw InputError("--out", "cannot open " + spec.output_path + " for writing");
    }
    std::ostream& out = spec.output_path.empty() ? std::cout : file;
    run_sweep(spec, out, [&](const SweepRow& row) {
        if (!spec.output_path.empty())
            std::cerr << "b=" << format_real(row.b) << " deviation=" << format_real(row.deviation) << " ("
                      << format_real(row.wall_time_ms) << " ms)\n";
    });
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool as_json) {
    const auto results = run_suite(suite, seed);
    if (!results) throw InputError("suite", "unknown suite '" + suite + "'");
    bool ok = true;
    cli::json arr = cli::json::array();
    for (const auto& p : *results) {
        ok = ok && p.passed();
        if (as_json) {
            arr.push_back(cli::to_json(p));
            continue;
        }
        std::printf("%-4s %-13s %-40s trials=%-6d failures=%-3d worst=%.3e tol=%.1e%s\n",
                    p.passed() ? "PASS" : "FAIL", p.suite.c_str(), p.name.c_str(), p.trials, p.failures,
                    p.worst_error, p.tolerance, p.informational ? " (reported)" : "");
    }
    if (as_json) std::cout << cli::json{{"seed", seed}, {"passed", ok}, {"properties", arr}}.dump(2) << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Capacities and minimum output entropy of fermionic product channels"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print machine-readable JSON");

    ChannelFlags cap_flags;
    auto* capacity = app.add_subcommand("capacity", "Closed-form Gaussian capacity of a channel");
    add_channel_flags(capacity, cap_flags, false);

    ChannelFlags smin_channel;
    MinimizerFlags smin_min;
    auto* smin = app.add_subcommand("smin", "Iterative minimum output entropy search");
    add_channel_flags(smin, smin_channel, true);
    add_minimizer_flags(smin, smin_min);

    SweepFlags sweep_flags;
    MinimizerFlags sweep_min;
    auto* sweep = app.add_subcommand("sweep", "Sweep a channel family and write CSV rows");
    sweep->add_option("--spec", sweep_flags.spec_path, "Sweep spec JSON");
    sweep->add_option("--family", sweep_flags.family, "plus or times");
    sweep->add_option("--n", sweep_flags.n, "Number of modes");
    sweep->add_option("--b-grid", sweep_flags.b_grid, "Comma-separated parameter values");
    sweep->add_flag("--full", sweep_flags.full, "Extend the default grid up to 0.99");
    sweep->add_option("--out", sweep_flags.out, "CSV output path (stdout if omitted)");
    add_minimizer_flags(sweep, sweep_min);

    std::string suite = "all";
    std::uint64_t verify_seed = 0;
    auto* verify = app.add_subcommand("verify", "Run randomized property suites");
    verify->add_option("suite", suite, "algebra, gaussian, majorization, capacity, minimizer or all");
    verify->add_option("--seed", verify_seed, "Seed for the random trials");

    for (auto* cmd : {capacity, smin, sweep, verify})
        cmd->add_flag("--json", as_json, "Print machine-readable JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*capacity) return cmd_capacity(cap_flags, as_json);
        if (*smin) return cmd_smin(smin_channel, smin_min, as_json);
        if (*sweep) return cmd_sweep(sweep_flags, sweep_min, *sweep);
        if (*verify) return cmd_verify(suite, verify_seed, as_json);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << (e.is_numerical() ? "numerics failure: " : "input error: ") << e.what() << '\n';
        return e.is_numerical() ? kExitNumerics : kExitInput;
    }
    return kExitOk;
}
