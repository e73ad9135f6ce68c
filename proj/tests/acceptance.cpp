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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Seeds are fixed so that every run evaluates the same instances.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fermicap/capacity.hpp"
#include "fermicap/channel.hpp"
#include "fermicap/gaussian.hpp"
#include "fermicap/majorization.hpp"
#include "fermicap/minimizer.hpp"
#include "fermicap/sampling.hpp"
#include "fermicap/sweep.hpp"
#include "fermicap/verify.hpp"

namespace {

using namespace fermicap;

struct Outcome {
    bool ok = true;
    double worst = 0.0;  // worst observed error in the criterion's own units
    std::string note;
};

struct Criterion {
    int id;
    std::string title;
    double tolerance;
    double time_limit_s;  // 0 = no limit
    std::function<Outcome()> body;
};

void track(Outcome& o, double err, double tol) {
    if (!(err <= tol)) o.ok = false;
    if (std::isnan(err) || err > o.worst) o.worst = err;
}

std::vector<double> random_b(int n, Rng& rng) { return random_coefficients(n, rng); }

// 1. apply_product vs apply_kraus
Outcome representation_equivalence() {
    Outcome o;
    Rng rng = make_rng(1001);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 3;
        const FermionicProductChannel ch(n, random_b(n, rng));
        const ComplexMatrix rho = random_density(ch.hilbert_dim(), rng);
        track(o, max_abs_diff(apply_product(ch, rho), apply_kraus(ch, rho)), 1e-12);
    }
    return o;
}

// 2. covariance of the channel output equals B M B^T
Outcome gaussian_closure() {
    Outcome o;
    Rng rng = make_rng(1002);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 3;
        const FermionicProductChannel ch(n, random_b(n, rng));
        const auto m = random_admissible_covariance(n, rng);
        const ComplexMatrix rho = density_from_covariance(m).matrix();
        const auto lhs = covariance_from_density(ch.apply(rho));
        track(o, max_abs_diff(lhs.matrix(), channel_on_covariance(ch, m).matrix()), 1e-10);
    }
    return o;
}

// 3. Gaussian entropy formula vs dense spectrum
Outcome entropy_formula() {
    Outcome o;
    Rng rng = make_rng(1003);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 3;
        const auto m = random_admissible_covariance(n, rng);
        track(o, std::abs(gaussian_entropy(m) - density_from_covariance(m).entropy()), 1e-10);
    }
    return o;
}

// 4. minimizer meets the Gaussian formula for n <= 2
Outcome small_n_exactness() {
    Outcome o;
    Rng rng = make_rng(1004);
    MinimizerConfig cfg;
    cfg.restarts = 64;
    cfg.iterations = kExactnessIterations;
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 2;
        const auto b = random_b(n, rng);
        cfg.seed = 40000 + 1000 * static_cast<std::uint64_t>(t);
        const auto run = minimize(FermionicProductChannel(n, b), cfg);
        track(o, std::abs(run.best_entropy - smin_gaussian(b)), 1e-6);
    }
    return o;
}

struct GridResult {
    Outcome outcome;
    double worst_witness = 0.0;
    std::size_t points = 0;
};

// Grid sweep shared by criteria 5, 6 and 11. Deviations must satisfy |d| <= 1e-7
// (which also rules out d < -1e-7).
GridResult family_grid(int n, const std::vector<std::pair<Family, double>>& grid_limits, std::uint64_t seed) {
    GridResult g;
    for (const auto& [family, upper] : grid_limits) {
        SweepSpec spec;
        spec.family = family;
        spec.n = n;
        for (double b : default_grid())
            if (b <= upper + 1e-12) spec.b_grid.push_back(b);
        spec.minimizer.seed = seed;
        for (std::size_t i = 0; i < spec.points(); ++i) {
            const auto b = point_coefficients(spec, i);
            MinimizerConfig cfg = spec.minimizer;
            cfg.seed = point_seed(seed, i);
            const auto run = minimize(FermionicProductChannel(n, b), cfg);
            track(g.outcome, std::abs(run.best_entropy - smin_gaussian(b)), 1e-7);
            if (run.gaussian_witness) g.worst_witness = std::max(g.worst_witness, run.gaussian_witness->deviation);
            ++g.points;
        }
    }
    g.outcome.note = std::to_string(g.points) + " grid points";
    return g;
}

GridResult figure_one_grid;  // reused by criterion 11

Outcome figure_one() {
    figure_one_grid = family_grid(3, {{Family::Plus, 0.70}, {Family::Times, 0.70}}, 7);
    return figure_one_grid.outcome;
}

Outcome figure_two() { return family_grid(4, {{Family::Plus, 0.90}, {Family::Times, 0.55}}, 7).outcome; }

// 7. depolarizing benchmark
Outcome depolarizing() {
    Outcome o;
    MinimizerConfig cfg;
    cfg.seed = 11;
    for (double p : {0.05, 0.10, 0.15, 0.20}) {
        const auto run = minimize(tensor_power(depolarizing_channel(p), 4), cfg);
        track(o, std::abs(run.best_entropy - 4.0 * binary_entropy(1.0 - 2.0 * p)), 1e-6);
    }
    return o;
}

// 8. Spec(Phi(rho)) majorized by Spec(Phi(rho_*)) for pure Gaussian rho
Outcome proposition_one() {
    Outcome o;
    Rng rng = make_rng(1008);
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + t % 4;
        const FermionicProductChannel ch(n, random_b(n, rng));
        const ComplexMatrix rho = random_pure_gaussian_state(n, rng);
        const auto r = spectrum_majorization_report(ch, rho, 1e-9);
        if (!r.holds) ++failures;
        o.worst = std::max({o.worst, -r.worst_prefix_margin, r.total_difference});
    }
    o.ok = failures == 0;
    o.note = std::to_string(failures) + " failures in 1000";
    return o;
}

// 9. product binary distributions
Outcome lemma_three() {
    Outcome o;
    Rng rng = make_rng(1009);
    int failures = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto pair = random_product_pair(1 + t % 6, rng);
        const auto r = majorization_report(product_binary_distribution(pair.beta),
                                           product_binary_distribution(pair.alpha));
        if (!check_product_majorization(pair.alpha, pair.beta)) ++failures;
        o.worst = std::max({o.worst, -r.worst_prefix_margin, r.total_difference});
    }
    o.ok = failures == 0;
    o.note = std::to_string(failures) + " failures in 10000";
    return o;
}

// 10. embedding, intertwining, Holevo quantity and the randomizing set
Outcome structural_identities() {
    Outcome o;
    Rng rng = make_rng(1010);
    double entropy_err = 0.0, intertwine_err = 0.0, holevo_err = 0.0;
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + t % 3;
        const FermionicProductChannel ch(n, random_b(n, rng));
        const ComplexMatrix rho = random_density(ch.hilbert_dim(), rng);
        entropy_err = std::max(entropy_err, std::abs(von_neumann_entropy(embed_mode(rho)) - von_neumann_entropy(rho) - 1.0));
        intertwine_err = std::max(intertwine_err, max_abs_diff(embed_mode(ch.apply(rho)), embed_hat(ch).apply(embed_mode(rho))));
    }
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 4;
        const auto b = random_b(n, rng);
        holevo_err = std::max(holevo_err,
                              std::abs(holevo_quantity(optimal_ensemble(b), FermionicProductChannel(n, b)) -
                                       (n - smin_gaussian(b))));
    }
    // 4^{-n} sum_x c(x) A c(x)^dagger = 2^{-n} Tr(A) I, checked in exact integer arithmetic
    bool randomizing_exact = true;
    std::uniform_int_distribution<int> small(-9, 9);
    for (int n = 1; n <= 3; ++n) {
        const std::size_t d = std::size_t{1} << n;
        for (int t = 0; t < 5; ++t) {
            ComplexMatrix a(d, d);
            for (auto& z : a.data()) z = Complex{double(small(rng)), double(small(rng))};
            ComplexMatrix sum(d, d);
            for (const auto& p : monomial_table(n)) sum += conjugate(p, a);
            const ComplexMatrix expected = ComplexMatrix::identity(d) * (trace(a) * Complex{double(d)});
            randomizing_exact = randomizing_exact && max_abs_diff(sum, expected) == 0.0;
        }
    }
    track(o, entropy_err, 1e-10);
    track(o, intertwine_err, 1e-12);
    track(o, holevo_err, 1e-9);
    o.ok = o.ok && randomizing_exact;
    char buf[200];
    std::snprintf(buf, sizeof buf, "entropy %.1e, intertwining %.1e, holevo %.1e, randomizing %s", entropy_err,
                  intertwine_err, holevo_err, randomizing_exact ? "exact" : "INEXACT");
    o.note = buf;
    return o;
}

// 11. Gaussian witness of the argmin states on the criterion-5 grid
Outcome gaussian_witness() {
    Outcome o;
    if (figure_one_grid.points == 0) figure_one();
    track(o, figure_one_grid.worst_witness, 1e-4);
    o.note = "argmin states of " + std::to_string(figure_one_grid.points) + " grid points";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "representation equivalence (product vs Kraus)", 1e-12, 10, representation_equivalence},
        {2, "Gaussian closure, output covariance = B M B^T", 1e-10, 10, gaussian_closure},
        {3, "Gaussian entropy formula vs dense spectrum", 1e-10, 0, entropy_formula},
        {4, "minimizer meets Gaussian formula for n <= 2", 1e-6, 60, small_n_exactness},
        {5, "n = 3 plus/times grid, b <= 0.70", 1e-7, 300, figure_one},
        {6, "n = 4 plus (b <= 0.90) / times (b <= 0.55) grid", 1e-7, 900, figure_two},
        {7, "depolarizing four copies, S = 4 H(1 - 2p)", 1e-6, 0, depolarizing},
        {8, "output spectra majorized by the optimal input's", 1e-9, 0, proposition_one},
        {9, "product binary distributions majorization", 1e-10, 0, lemma_three},
        {10, "embedding, intertwining, Holevo, randomizing set", 1e-9, 0, structural_identities},
        {11, "Gaussian witness of argmin states", 1e-4, 0, gaussian_witness},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
        const bool ok = o.ok && in_time;
        failed += ok ? 0 : 1;
        std::printf("%s [%2d] %-50s worst=%.3e tol=%.0e time=%.2fs%s%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), o.worst, c.tolerance, secs, in_time ? "" : " (over time limit)",
                    o.note.empty() ? "" : "  ", o.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
