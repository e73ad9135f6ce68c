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
 * @brief Alternating minimization of the output entropy over pure inputs.
 *
 * With h(rho, eta) = -Tr[Phi(rho) log Phi(eta)] one has h(rho, rho) = S(Phi(rho))
 * and h(rho, eta) >= h(rho, rho). Minimizing h over the pure rho for a fixed
 * eta = psi_k psi_k^dagger selects the top eigenvector of
 * Phi^*(log Phi(eta)), so the sequence S_k = S(Phi(psi_k psi_k^dagger)) never
 * increases. Random restarts are the only escape from local minima.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "fermicap/channel.hpp"
#include "fermicap/error.hpp"
#include "fermicap/gaussian.hpp"
#include "fermicap/numerics.hpp"
#include "fermicap/sampling.hpp"

namespace fermicap {

struct MinimizerConfig {
    int iterations = 64;
    int restarts = 16;
    std::uint64_t seed = 0;
    double convergence_tol = 1e-12;  // bits
    double degeneracy_tol = 1e-10;   // relative to the spectral range
    double log_floor = kDefaultLogFloor;
    int threads = 1;

    void validate() const {
        require(iterations >= 1, ErrorKind::InvalidConfig, "iterations must be at least 1");
        require(restarts >= 1, ErrorKind::InvalidConfig, "restarts must be at least 1");
        require(convergence_tol > 0.0, ErrorKind::InvalidConfig, "convergence_tol must be positive");
        require(degeneracy_tol > 0.0, ErrorKind::InvalidConfig, "degeneracy_tol must be positive");
        require(log_floor > 0.0, ErrorKind::InvalidConfig, "log_floor must be positive");
        require(threads >= 1, ErrorKind::InvalidConfig, "threads must be at least 1");
    }
};

inline constexpr double kMonotoneSlack = 1e-9;
inline constexpr double kAgreementTol = 1e-8;

struct RestartTrace {
    std::uint64_t seed = 0;
    std::vector<double> entropies;  // S_0, S_1, ... in bits
    bool floor_active = false;      // some output eigenvalue was clamped by log_floor
    ComplexVector final_state;

    double final_entropy() const { return entropies.back(); }

    bool monotone(double slack = kMonotoneSlack) const {
        for (std::size_t k = 1; k < entropies.size(); ++k)
            if (entropies[k] > entropies[k - 1] + slack) return false;
        return true;
    }
};

struct MinimizerRun {
    MinimizerConfig config;
    std::vector<RestartTrace> traces;
    double best_entropy = std::numeric_limits<double>::infinity();
    std::size_t best_restart = 0;
    ComplexVector best_state;
    std::optional<GaussianityWitness> gaussian_witness;  // fermionic channels with n + 1 <= 5 only

    /// Restarts finishing within tol of the best entropy.
    int restarts_agreeing(double tol = kAgreementTol) const {
        return static_cast<int>(std::count_if(traces.begin(), traces.end(), [&](const RestartTrace& t) {
            return t.final_entropy() - best_entropy <= tol;
        }));
    }

    double worst_entropy() const {
        double w = -std::numeric_limits<double>::infinity();
        for (const auto& t : traces) w = std::max(w, t.final_entropy());
        return w;
    }

    bool any_floor_active() const {
        return std::any_of(traces.begin(), traces.end(), [](const RestartTrace& t) { return t.floor_active; });
    }
};

// ---------------------------------------------------------------------------

struct StepResult {
    ComplexVector state;
    double input_entropy = 0.0;  // S(Phi(psi psi^dagger)) of the incoming state
    bool floor_active = false;
    std::size_t degeneracy = 1;
};

template <QuantumChannel Channel>
double output_entropy(const Channel& ch, std::span<const Complex> psi) {
    return von_neumann_entropy(ch.apply(outer_projector(psi)));
}

/// One update psi -> top eigenvector of Phi^*(log Phi(psi psi^dagger)).
template <QuantumChannel Channel>
StepResult iterate_step_detailed(const Channel& ch, std::span<const Complex> psi, const MinimizerConfig& cfg,
                                 Rng& rng) {
    require(psi.size() == ch.hilbert_dim(), ErrorKind::DimensionMismatch, "state and channel dimensions differ");
    const double nrm = vector_norm(psi);
    require(std::abs(nrm - 1.0) <= 1e-10, ErrorKind::InvalidState, "input vector is not normalized");

    StepResult out;
    const auto out_eig = hermitian_eig(ch.apply(outer_projector(psi)));
    out.input_entropy = entropy_bits(out_eig.values);
    out.floor_active = out_eig.values.front() < cfg.log_floor;
    const ComplexMatrix g = ch.adjoint(matrix_log_psd(out_eig, cfg.log_floor));
    const auto eig = hermitian_eig(g);

    const std::size_t d = eig.values.size();
    const double top = eig.values.back();
    const double range = top - eig.values.front();
    std::size_t first = d - 1;
    while (first > 0 && top - eig.values[first - 1] <= cfg.degeneracy_tol * range) --first;
    out.degeneracy = d - first;

    out.state.assign(d, Complex{});
    if (out.degeneracy == 1) {
        for (std::size_t r = 0; r < d; ++r) out.state[r] = eig.vectors(r, d - 1);
        return out;
    }
    // isotropic random vector in the degenerate eigenspace
    for (std::size_t j = first; j < d; ++j) {
        const Complex w = complex_gaussian(rng);
        for (std::size_t r = 0; r < d; ++r) out.state[r] += w * eig.vectors(r, j);
    }
    const double s = vector_norm(out.state);
    for (auto& z : out.state) z /= s;
    return out;
}

template <QuantumChannel Channel>
ComplexVector iterate_step(const Channel& ch, std::span<const Complex> psi, const MinimizerConfig& cfg, Rng& rng) {
    return iterate_step_detailed(ch, psi, cfg, rng).state;
}

/// A single restart from a Haar-random initial vector drawn with `seed`.
template <QuantumChannel Channel>
RestartTrace run_restart(const Channel& ch, const MinimizerConfig& cfg, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    RestartTrace trace;
    trace.seed = seed;
    ComplexVector psi = random_unit_vector(ch.hilbert_dim(), rng);
    for (int k = 0; k < cfg.iterations; ++k) {
        StepResult step = iterate_step_detailed(ch, psi, cfg, rng);
        trace.entropies.push_back(step.input_entropy);
        trace.floor_active = trace.floor_active || step.floor_active;
        psi = std::move(step.state);
        if (k > 0) {
            const double delta = trace.entropies[k - 1] - trace.entropies[k];
            if (std::abs(delta) < cfg.convergence_tol) break;
        }
    }
    // entropy of the state actually returned
    trace.entropies.push_back(output_entropy(ch, psi));
    trace.final_state = std::move(psi);
    return trace;
}

/**
 * Runs cfg.restarts independent restarts with seeds cfg.seed + r and keeps the
 * best. Restarts run on up to cfg.threads threads; the result does not depend
 * on the thread count.
 */
template <QuantumChannel Channel>
MinimizerRun minimize(const Channel& ch, const MinimizerConfig& cfg) {
    cfg.validate();
    MinimizerRun run;
    run.config = cfg;
    run.traces.resize(cfg.restarts);

    const auto worker = [&](int begin, int stride, std::exception_ptr& failure) {
        try {
            for (int r = begin; r < cfg.restarts; r += stride)
                run.traces[r] = run_restart(ch, cfg, cfg.seed + static_cast<std::uint64_t>(r));
        } catch (...) {
            failure = std::current_exception();
        }
    };
    const int workers = std::min(cfg.threads, cfg.restarts);
    std::vector<std::exception_ptr> failures(workers);
    if (workers == 1) {
        worker(0, 1, failures[0]);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker, t, workers, std::ref(failures[t]));
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    for (std::size_t r = 0; r < run.traces.size(); ++r) {
        if (run.traces[r].final_entropy() < run.best_entropy) {
            run.best_entropy = run.traces[r].final_entropy();
            run.best_restart = r;
        }
    }
    run.best_state = run.traces[run.best_restart].final_state;

    if constexpr (std::is_same_v<Channel, FermionicProductChannel>) {
        if (ch.modes() + 1 <= kMaxModes)
            run.gaussian_witness = gaussian_pure_witness(outer_projector(run.best_state), 1e-4);
    }
    return run;
}

/// h(rho, eta) = -Tr[Phi(rho) log Phi(eta)] in bits, with the same log floor as the minimizer.
template <QuantumChannel Channel>
double h_functional(const Channel& ch, const DensityOperator& rho, const DensityOperator& eta,
                    double log_floor = kDefaultLogFloor) {
    require(rho.dim() == ch.hilbert_dim() && eta.dim() == ch.hilbert_dim(), ErrorKind::DimensionMismatch,
            "state and channel dimensions differ");
    const ComplexMatrix log_eta = matrix_log_psd(ch.apply(eta.matrix()), log_floor);
    const ComplexMatrix out = ch.apply(rho.matrix());
    Complex tr{};
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) tr += out(i, j) * log_eta(j, i);
    return -tr.real() / std::log(2.0);
}

/// S(rho || eta) in bits for full-rank eta.
inline double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& eta,
                               double log_floor = kDefaultLogFloor) {
    const ComplexMatrix diff = matrix_log_psd(rho, log_floor) - matrix_log_psd(eta, log_floor);
    Complex tr{};
    for (std::size_t i = 0; i < rho.rows(); ++i)
        for (std::size_t j = 0; j < rho.cols(); ++j) tr += rho(i, j) * diff(j, i);
    return tr.real() / std::log(2.0);
}

}  // namespace fermicap
