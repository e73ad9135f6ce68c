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
 * @brief Even fermionic Gaussian states through their covariance matrices
 *
 *   M_pq = -(i/2) Tr[rho (c_p c_q - c_q c_p)].
 *
 * An even Gaussian state is fixed by M through Wick's rule
 * Tr(rho c(x)) = i^{|x|/2} Pf(M[x]); M is admissible iff M^T M <= I and the
 * state is pure iff M^T M = I.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "fermicap/channel.hpp"
#include "fermicap/clifford.hpp"
#include "fermicap/error.hpp"
#include "fermicap/numerics.hpp"

namespace fermicap {

inline constexpr double kAdmissibleTol = 1e-8;

class CovarianceMatrix {
public:
    explicit CovarianceMatrix(AntisymmetricMatrix m, double tol = kAdmissibleTol)
        : m_(std::move(m)) {
        require(m_.dim() >= 2, ErrorKind::DimensionMismatch, "covariance matrix needs at least one mode");
        require(m_.modes() <= static_cast<std::size_t>(kMaxModes), ErrorKind::DimensionMismatch,
                "too many modes for a dense representation");
        lambdas_ = antisymmetric_singular_values(m_);
        require(lambdas_.front() <= 1.0 + tol, ErrorKind::Inadmissible,
                "singular value " + std::to_string(lambdas_.front()) + " exceeds 1");
    }

    explicit CovarianceMatrix(const RealMatrix& m, double tol = kAdmissibleTol)
        : CovarianceMatrix(AntisymmetricMatrix(m), tol) {}

    /// Covariance of |0...0>: blocks [[0, 1], [-1, 0]].
    static CovarianceMatrix vacuum(int n) {
        RealMatrix m(2 * n, 2 * n);
        for (int j = 0; j < n; ++j) {
            m(2 * j, 2 * j + 1) = 1.0;
            m(2 * j + 1, 2 * j) = -1.0;
        }
        return CovarianceMatrix(m);
    }

    int modes() const noexcept { return static_cast<int>(m_.modes()); }
    std::size_t dim() const noexcept { return m_.dim(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const AntisymmetricMatrix& antisymmetric() const noexcept { return m_; }
    const RealMatrix& matrix() const noexcept { return m_.matrix(); }

    /// lambda_1 >= ... >= lambda_n
    const std::vector<double>& singular_values() const noexcept { return lambdas_; }

    bool is_pure(double tol = 1e-10) const {
        return std::all_of(lambdas_.begin(), lambdas_.end(),
                           [tol](double l) { return std::abs(l - 1.0) <= tol; });
    }

private:
    AntisymmetricMatrix m_;
    std::vector<double> lambdas_;
};

inline int qubits_of(const ComplexMatrix& rho) {
    require(rho.is_square() && std::has_single_bit(rho.rows()), ErrorKind::DimensionMismatch,
            "operator dimension must be a power of two");
    return std::countr_zero(rho.rows());
}

/// Tr(rho c(x)) for the unit-phase monomial c(x).
inline Complex monomial_expectation(const ComplexMatrix& rho, BitString x) {
    const int n = qubits_of(rho);
    return trace_product(monomial_table(n).at(x), rho);
}

/// M_pq = -i Tr(rho c_p c_q) for p != q; the imaginary residue is dropped.
inline CovarianceMatrix covariance_from_density(const ComplexMatrix& rho) {
    const int n = qubits_of(rho);
    check_mode_count(n);
    const std::size_t d2 = 2 * static_cast<std::size_t>(n);
    RealMatrix m(d2, d2);
    for (std::size_t p = 0; p < d2; ++p) {
        for (std::size_t q = p + 1; q < d2; ++q) {
            const BitString x = (BitString{1} << p) | (BitString{1} << q);
            const Complex v = Complex{0.0, -1.0} * monomial_expectation(rho, x);
            m(p, q) = v.real();
            m(q, p) = -v.real();
        }
    }
    return CovarianceMatrix(m);
}

inline CovarianceMatrix covariance_from_density(const DensityOperator& rho) {
    return covariance_from_density(rho.matrix());
}

/// d_p = Tr(rho c_p)
inline std::vector<double> first_moments(const ComplexMatrix& rho) {
    const int n = qubits_of(rho);
    std::vector<double> d(2 * n);
    for (int p = 0; p < 2 * n; ++p) d[p] = monomial_expectation(rho, BitString{1} << p).real();
    return d;
}

inline std::vector<std::size_t> support_indices(BitString x, int bits) {
    std::vector<std::size_t> idx;
    for (int p = 0; p < bits; ++p)
        if ((x >> p) & 1u) idx.push_back(static_cast<std::size_t>(p));
    return idx;
}

/// Wick's rule: i^{|x|/2} Pf(M[x]), with Tr(rho) = 1 for x = 0.
inline Complex wick_moment(const CovarianceMatrix& m, BitString x) {
    const int bits = static_cast<int>(m.dim());
    require(x < (BitString{1} << bits), ErrorKind::IndexOutOfRange, "bit string longer than 2n");
    const int w = hamming_weight(x);
    require(w % 2 == 0, ErrorKind::OddWeight, "Wick moment needs an even-weight string");
    if (w == 0) return {1.0, 0.0};
    const auto idx = support_indices(x, bits);
    return phase_value(w / 2) * pfaffian(m.antisymmetric().submatrix(idx));
}

/**
 * rho = 2^{-n} sum_{even x} a_x c(x) with a_x = Tr(c(x)^dagger rho). Since
 * c(x)^dagger = (-1)^{|x|/2} c(x) for even |x|, a_x = (-i)^{|x|/2} Pf(M[x]).
 */
inline DensityOperator density_from_covariance(const CovarianceMatrix& m) {
    const int n = m.modes();
    const auto& table = monomial_table(n);
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix rho(d, d);
    const double inv_d = 1.0 / static_cast<double>(d);
    for (BitString x = 0; x < table.size(); ++x) {
        const int w = hamming_weight(x);
        if (w % 2 == 1) continue;
        const Complex a = w == 0 ? Complex{1.0}
                                 : phase_value(-(w / 2)) * pfaffian(m.antisymmetric().submatrix(support_indices(x, 2 * n)));
        if (a == Complex{}) continue;
        add_scaled(rho, a * inv_d, table[x]);
    }
    return DensityOperator(std::move(rho));
}

/// sum_j H((1 + lambda_j) / 2), in bits.
inline double gaussian_entropy(const CovarianceMatrix& m) {
    double s = 0.0;
    for (double l : m.singular_values()) s += binary_entropy(0.5 * (1.0 + std::clamp(l, 0.0, 1.0)));
    return s;
}

/// B M B^T with B = diag(b).
inline CovarianceMatrix channel_on_covariance(const FermionicProductChannel& ch, const CovarianceMatrix& m) {
    require(m.dim() == 2 * static_cast<std::size_t>(ch.modes()), ErrorKind::DimensionMismatch,
            "covariance and channel mode counts differ");
    const auto& b = ch.coefficients();
    RealMatrix out(m.dim(), m.dim());
    for (std::size_t p = 0; p < m.dim(); ++p)
        for (std::size_t q = p + 1; q < m.dim(); ++q) {
            out(p, q) = b[p] * m(p, q) * b[q];
            out(q, p) = -out(p, q);
        }
    return CovarianceMatrix(out);
}

inline constexpr double kOrthogonalTol = 1e-10;

/// R M R^T for orthogonal R.
inline CovarianceMatrix rotate_covariance(const RealMatrix& r, const CovarianceMatrix& m) {
    require(r.is_square() && r.rows() == m.dim(), ErrorKind::DimensionMismatch, "rotation dimension mismatch");
    const double defect = orthogonality_defect(r);
    require(defect <= kOrthogonalTol, ErrorKind::NotOrthogonal,
            "|R R^T - I|_max = " + std::to_string(defect));
    RealMatrix out = r * m.matrix() * r.transpose();
    for (std::size_t p = 0; p < out.rows(); ++p) {
        out(p, p) = 0.0;
        for (std::size_t q = p + 1; q < out.cols(); ++q) {
            const double v = 0.5 * (out(p, q) - out(q, p));
            out(p, q) = v;
            out(q, p) = -v;
        }
    }
    return CovarianceMatrix(out);
}

// ---------------------------------------------------------------------------

struct GaussianityWitness {
    bool gaussian = false;
    bool embedded = false;              // singular values taken after one added mode
    std::vector<double> singular_values;
    double deviation = 0.0;             // max distance to the pure-Gaussian pattern
};

/**
 * Singular values of the covariance of E(rho) compared to the pattern of a
 * pure Gaussian input: n ones followed by a single zero.
 */
inline GaussianityWitness gaussian_pure_witness(const ComplexMatrix& rho, double tol = 1e-8) {
    const int n = qubits_of(rho);
    const auto cov = covariance_from_density(embed_mode(rho));
    GaussianityWitness w{false, true, cov.singular_values(), 0.0};
    for (int j = 0; j <= n; ++j) {
        const double target = j < n ? 1.0 : 0.0;
        w.deviation = std::max(w.deviation, std::abs(w.singular_values[j] - target));
    }
    w.gaussian = w.deviation <= tol;
    return w;
}

/**
 * Gaussianity test for pure states. Parity-definite states are checked directly
 * (all lambda_j = 1); anything else goes through embed_mode first.
 */
inline GaussianityWitness is_gaussian_pure(const ComplexMatrix& rho, double tol = 1e-8) {
    const int n = qubits_of(rho);
    check_mode_count(n);
    const auto eig = hermitian_eig(rho);
    require(eig.values.back() >= 1.0 - tol, ErrorKind::NotPure,
            "largest eigenvalue " + std::to_string(eig.values.back()) + " below 1 - tol");

    const ComplexMatrix p = parity_operator(n);
    const double parity_defect = max_abs_diff(p * rho, rho * p);
    if (parity_defect <= tol) {
        const auto cov = covariance_from_density(rho);
        GaussianityWitness w{false, false, cov.singular_values(), 0.0};
        for (double l : w.singular_values) w.deviation = std::max(w.deviation, std::abs(l - 1.0));
        w.gaussian = w.deviation <= tol;
        return w;
    }
    if (n + 1 > kMaxModes)
        throw Error(ErrorKind::OutOfRange, "embedding would exceed the supported mode count");
    return gaussian_pure_witness(rho, tol);
}

inline GaussianityWitness is_gaussian_pure(const DensityOperator& rho, double tol = 1e-8) {
    return is_gaussian_pure(rho.matrix(), tol);
}

}  // namespace fermicap
