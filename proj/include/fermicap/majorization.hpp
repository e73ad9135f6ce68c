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
 * @brief Majorization of real vectors and density-operator spectra.
 *
 * y < z (y is majorized by z) iff every prefix sum of y sorted descending is
 * at most the matching prefix sum of z, with equal totals.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fermicap/capacity.hpp"
#include "fermicap/channel.hpp"
#include "fermicap/error.hpp"
#include "fermicap/numerics.hpp"

namespace fermicap {

inline constexpr double kMajorizationTol = 1e-10;

struct MajorizationReport {
    bool holds = false;
    // min over k of (prefix_z - prefix_y); negative means a violated prefix
    double worst_prefix_margin = std::numeric_limits<double>::infinity();
    std::size_t worst_prefix = 0;
    double total_difference = 0.0;  // |sum z - sum y|
};

inline MajorizationReport majorization_report(std::span<const double> z, std::span<const double> y,
                                              double tol = kMajorizationTol) {
    require(z.size() == y.size(), ErrorKind::LengthMismatch,
            "vectors of length " + std::to_string(z.size()) + " and " + std::to_string(y.size()));
    std::vector<double> zs(z.begin(), z.end());
    std::vector<double> ys(y.begin(), y.end());
    std::sort(zs.begin(), zs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    MajorizationReport r;
    double pz = 0.0;
    double py = 0.0;
    for (std::size_t k = 0; k < zs.size(); ++k) {
        pz += zs[k];
        py += ys[k];
        if (k + 1 < zs.size() && pz - py < r.worst_prefix_margin) {
            r.worst_prefix_margin = pz - py;
            r.worst_prefix = k + 1;
        }
    }
    r.total_difference = std::abs(pz - py);
    r.holds = r.worst_prefix_margin >= -tol && r.total_difference <= tol;
    return r;
}

/// True iff y is majorized by z.
inline bool majorizes(std::span<const double> z, std::span<const double> y, double tol = kMajorizationTol) {
    return majorization_report(z, y, tol).holds;
}

/**
 * y_a = lam z_a + (1 - lam) z_b, y_b = (1 - lam) z_a + lam z_b. Indices are
 * zero-based with a < b.
 */
inline std::vector<double> t_transform(std::span<const double> z, std::size_t a, std::size_t b, double lam) {
    require(a < b && b < z.size(), ErrorKind::IndexOutOfRange,
            "T-transform needs a < b < " + std::to_string(z.size()));
    require(lam >= 0.0 && lam <= 1.0, ErrorKind::OutOfRange, "T-transform weight outside [0, 1]");
    std::vector<double> y(z.begin(), z.end());
    y[a] = lam * z[a] + (1.0 - lam) * z[b];
    y[b] = (1.0 - lam) * z[a] + lam * z[b];
    return y;
}

/// P(x) = 2^{-n} prod_j (1 + (-1)^{x_j} alpha_j); bit j-1 of the index is x_j.
inline std::vector<double> product_binary_distribution(std::span<const double> alpha) {
    for (double a : alpha)
        require(a >= 0.0 && a <= 1.0, ErrorKind::OutOfRange, "alpha " + std::to_string(a) + " outside [0, 1]");
    const std::size_t n = alpha.size();
    std::vector<double> p(std::size_t{1} << n);
    for (std::size_t x = 0; x < p.size(); ++x) {
        double v = 1.0;
        for (std::size_t j = 0; j < n; ++j) v *= 0.5 * (((x >> j) & 1u) ? 1.0 - alpha[j] : 1.0 + alpha[j]);
        p[x] = v;
    }
    return p;
}

/**
 * Checks the product-distribution majorization P(alpha) < Q(beta). The
 * hypothesis (both descending in [0, 1], prefix products of alpha bounded by
 * those of beta, equal full products) is validated, and HypothesisViolated is
 * thrown when it fails so that a false return always means a counterexample.
 */
inline bool check_product_majorization(std::span<const double> alpha, std::span<const double> beta,
                                       double tol = kMajorizationTol) {
    require(alpha.size() == beta.size() && !alpha.empty(), ErrorKind::LengthMismatch,
            "alpha and beta must be non-empty and of equal length");
    const auto check_range = [](std::span<const double> v, const char* name) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            require(v[j] >= 0.0 && v[j] <= 1.0, ErrorKind::HypothesisViolated,
                    std::string(name) + " entry outside [0, 1]");
            require(j == 0 || v[j] <= v[j - 1], ErrorKind::HypothesisViolated,
                    std::string(name) + " is not descending");
        }
    };
    check_range(alpha, "alpha");
    check_range(beta, "beta");
    double pa = 1.0;
    double pb = 1.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        pa *= alpha[k];
        pb *= beta[k];
        require(pa <= pb + tol, ErrorKind::HypothesisViolated,
                "prefix product " + std::to_string(k + 1) + " of alpha exceeds that of beta");
    }
    require(std::abs(pa - pb) <= tol, ErrorKind::HypothesisViolated, "full products differ");
    return majorizes(product_binary_distribution(beta), product_binary_distribution(alpha), tol);
}

/// Eigenvalues of a density operator, clamped at zero.
inline std::vector<double> spectrum(const ComplexMatrix& rho) {
    auto values = hermitian_eig(rho).values;
    for (auto& v : values) v = std::max(v, 0.0);
    return values;
}

/// Spec(Phi(rho)) < Spec(Phi(rho_*)), rho_* the optimal Gaussian input for ch.
inline MajorizationReport spectrum_majorization_report(const FermionicProductChannel& ch, const ComplexMatrix& rho,
                                                       double tol = kMajorizationTol) {
    check_operator_dim(rho, ch.hilbert_dim());
    const auto star = optimal_input_state(ch);
    return majorization_report(spectrum(apply_product(ch, star.state.matrix())), spectrum(apply_product(ch, rho)),
                               tol);
}

inline bool spectrum_majorization_check(const FermionicProductChannel& ch, const DensityOperator& rho,
                                        double tol = kMajorizationTol) {
    return spectrum_majorization_report(ch, rho.matrix(), tol).holds;
}

/// Renyi entropy in bits; alpha = +infinity gives the min-entropy.
inline double renyi_entropy(std::span<const double> spectrum, double alpha) {
    require(alpha > 0.0 && alpha != 1.0, ErrorKind::OutOfRange, "Renyi order must be positive and not 1");
    if (std::isinf(alpha)) return -std::log2(*std::max_element(spectrum.begin(), spectrum.end()));
    double s = 0.0;
    for (double p : spectrum)
        if (p > 0.0) s += std::pow(p, alpha);
    return std::log2(s) / (1.0 - alpha);
}

}  // namespace fermicap
