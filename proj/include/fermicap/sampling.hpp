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
 * @brief Seeded random generators for states, rotations and channels used by
 * the minimizer restarts and the randomized property checks.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fermicap/channel.hpp"
#include "fermicap/clifford.hpp"
#include "fermicap/gaussian.hpp"
#include "fermicap/majorization.hpp"
#include "fermicap/numerics.hpp"

namespace fermicap {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return Rng(seq);
}

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline Complex complex_gaussian(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

/// Haar-distributed unit vector (normalized complex Gaussian entries).
inline ComplexVector random_unit_vector(std::size_t dim, Rng& rng) {
    ComplexVector v(dim);
    for (auto& z : v) z = complex_gaussian(rng);
    const double nrm = vector_norm(v);
    for (auto& z : v) z /= nrm;
    return v;
}

inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
    ComplexMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        a(i, i) = complex_gaussian(rng).real();
        for (std::size_t j = i + 1; j < dim; ++j) {
            a(i, j) = complex_gaussian(rng);
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

inline ComplexMatrix random_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix a(dim, dim);
    for (auto& z : a.data()) z = complex_gaussian(rng);
    return a;
}

/// Ginibre ensemble: G G^dagger / Tr, full rank almost surely.
inline ComplexMatrix random_density(std::size_t dim, Rng& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= Complex{1.0 / trace(rho).real()};
    for (std::size_t i = 0; i < dim; ++i) {
        rho(i, i) = rho(i, i).real();
        for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
    }
    return rho;
}

inline RealMatrix random_real_matrix(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    RealMatrix a(dim, dim);
    for (auto& v : a.data()) v = g(rng);
    return a;
}

inline AntisymmetricMatrix random_antisymmetric(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    RealMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            a(i, j) = g(rng);
            a(j, i) = -a(i, j);
        }
    return AntisymmetricMatrix(a);
}

/// Product of random Givens rotations; lands in SO(dim).
inline RealMatrix random_orthogonal(std::size_t dim, Rng& rng) {
    RealMatrix r = RealMatrix::identity(dim);
    if (dim < 2) return r;
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    const std::size_t rounds = 4 * dim * dim;
    for (std::size_t k = 0; k < rounds; ++k) {
        std::size_t p = pick(rng);
        std::size_t q = pick(rng);
        if (p == q) continue;
        const double phi = 2.0 * std::numbers::pi * uniform01(rng);
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        for (std::size_t i = 0; i < dim; ++i) {
            const double rp = r(p, i);
            const double rq = r(q, i);
            r(p, i) = c * rp - s * rq;
            r(q, i) = s * rp + c * rq;
        }
    }
    return r;
}

/// Block-diagonal lambda_j-scaled vacuum blocks.
inline CovarianceMatrix canonical_covariance(std::span<const double> lambdas) {
    const std::size_t n = lambdas.size();
    RealMatrix m(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        m(2 * j, 2 * j + 1) = lambdas[j];
        m(2 * j + 1, 2 * j) = -lambdas[j];
    }
    return CovarianceMatrix(m);
}

/// R diag(lambda_j omega) R^T with lambda_j uniform in [0, 1].
inline CovarianceMatrix random_admissible_covariance(int n, Rng& rng) {
    std::vector<double> lambdas(n);
    for (auto& l : lambdas) l = uniform01(rng);
    return rotate_covariance(random_orthogonal(2 * n, rng), canonical_covariance(lambdas));
}

inline CovarianceMatrix random_pure_gaussian_covariance(int n, Rng& rng) {
    return rotate_covariance(random_orthogonal(2 * n, rng), CovarianceMatrix::vacuum(n));
}

/**
 * Pure Gaussian state without parity restriction: an even pure Gaussian state
 * followed by exp(i theta u.c) for a random unit vector u, which is a
 * Gaussian unitary generated by a linear Hamiltonian.
 */
inline ComplexMatrix random_pure_gaussian_state(int n, Rng& rng) {
    const ComplexMatrix even = density_from_covariance(random_pure_gaussian_covariance(n, rng)).matrix();
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> u(2 * n);
    double nrm = 0.0;
    for (auto& v : u) {
        v = g(rng);
        nrm += v * v;
    }
    nrm = std::sqrt(nrm);
    const double theta = std::numbers::pi * uniform01(rng);
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix w = ComplexMatrix::identity(d) * Complex{std::cos(theta)};
    for (int p = 1; p <= 2 * n; ++p)
        add_scaled(w, Complex{0.0, std::sin(theta) * u[p - 1] / nrm}, generator_pauli(p, n));
    return w * even * w.adjoint();
}

/// Random superposition of even-parity basis states (P psi = psi).
inline ComplexVector random_even_pure_vector(int n, Rng& rng) {
    const std::size_t d = std::size_t{1} << n;
    ComplexVector v(d);
    for (std::size_t i = 0; i < d; ++i)
        if (std::popcount(i) % 2 == 0) v[i] = complex_gaussian(rng);
    const double nrm = vector_norm(v);
    for (auto& z : v) z /= nrm;
    return v;
}

inline std::vector<double> random_coefficients(int n, Rng& rng) {
    std::vector<double> b(2 * n);
    for (auto& v : b) v = uniform01(rng);
    return b;
}

/// Applies `steps` random T-transforms; the result is majorized by z.
inline std::vector<double> random_t_chain(std::vector<double> z, int steps, Rng& rng) {
    if (z.size() < 2) return z;
    std::uniform_int_distribution<std::size_t> pick(0, z.size() - 1);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        z = t_transform(z, a, b, uniform01(rng));
    }
    return z;
}

/// Random probability vector of length d (normalized exponential weights).
inline std::vector<double> random_distribution(std::size_t d, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> p(d);
    double total = 0.0;
    for (auto& v : p) total += (v = e(rng));
    for (auto& v : p) v /= total;
    return p;
}

struct ProductPair {
    std::vector<double> alpha;
    std::vector<double> beta;
};

/**
 * (alpha, beta) with both descending in [0, 1], prefix products of alpha
 * bounded by those of beta and equal full products. In log space the prefix
 * condition is y < z with y = log alpha, z = log beta, so alpha is drawn as the
 * exponential of a T-transform chain applied to log beta.
 */
inline ProductPair random_product_pair(int n, Rng& rng, double beta_min = 0.01) {
    std::vector<double> beta(n);
    for (auto& v : beta) v = beta_min + (1.0 - beta_min) * uniform01(rng);
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<double> z(n);
    for (int j = 0; j < n; ++j) z[j] = std::log(beta[j]);
    auto y = random_t_chain(z, 3 * n, rng);
    std::sort(y.begin(), y.end(), std::greater<>());
    std::vector<double> alpha(n);
    for (int j = 0; j < n; ++j) alpha[j] = std::min(1.0, std::exp(y[j]));
    return {std::move(alpha), std::move(beta)};
}

}  // namespace fermicap
