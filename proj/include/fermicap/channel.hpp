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
 * @brief Fermionic product channels and generic Kraus channels.
 *
 * A fermionic product channel on n qubits scales every monomial c(x) by the
 * product of its attenuation coefficients b_p over the support of x. Two
 * independent execution paths exist: the moment-space route apply_product
 * (default) and the Kraus sum apply_kraus with
 *
 *   p(x) = 2^{-2n} prod_q (1 + (-1)^{|x| + x_q} b_q).
 */

#pragma once

#include <bit>
#include <cmath>
#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fermicap/clifford.hpp"
#include "fermicap/error.hpp"
#include "fermicap/numerics.hpp"

namespace fermicap {

inline constexpr double kStateTol = 1e-10;

/// Hermitian, unit-trace, PSD operator; validated on construction.
class DensityOperator {
public:
    DensityOperator() = default;

    explicit DensityOperator(ComplexMatrix m, double tol = kStateTol) : m_(std::move(m)) {
        require(m_.is_square() && std::has_single_bit(m_.rows()), ErrorKind::DimensionMismatch,
                "density operator dimension must be a power of two");
        const double herm = hermiticity_defect(m_);
        require(herm <= tol, ErrorKind::InvalidState, "not Hermitian (defect " + std::to_string(herm) + ")");
        const double tr_err = std::abs(trace(m_) - Complex{1.0});
        require(tr_err <= tol, ErrorKind::InvalidState, "trace differs from 1 by " + std::to_string(tr_err));
        const auto eig = hermitian_eig(m_);
        require(eig.values.front() >= -tol, ErrorKind::InvalidState,
                "negative eigenvalue " + std::to_string(eig.values.front()));
    }

    static DensityOperator maximally_mixed(int n) {
        const std::size_t d = std::size_t{1} << n;
        return DensityOperator(ComplexMatrix::identity(d) * Complex{1.0 / static_cast<double>(d)});
    }

    static DensityOperator pure(std::span<const Complex> psi) {
        const double nrm = vector_norm(psi);
        require(std::abs(nrm - 1.0) <= kStateTol, ErrorKind::InvalidState, "state vector is not normalized");
        return DensityOperator(outer_projector(psi));
    }

    /// |0...0><0...0|
    static DensityOperator vacuum(int n) {
        const std::size_t d = std::size_t{1} << n;
        ComplexMatrix m(d, d);
        m(0, 0) = 1.0;
        return DensityOperator(std::move(m));
    }

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.rows(); }
    int qubits() const noexcept { return std::countr_zero(m_.rows()); }

    double entropy() const { return von_neumann_entropy(m_); }

private:
    ComplexMatrix m_;
};

// ---------------------------------------------------------------------------

/// Product of one-mode attenuation channels c_p -> b_p c_p.
class FermionicProductChannel {
public:
    FermionicProductChannel(int n, std::vector<double> b) : n_(n), b_(std::move(b)) {
        require(n >= 1 && n <= kMaxModes, ErrorKind::InvalidChannel,
                "n must be in [1, " + std::to_string(kMaxModes) + "], got " + std::to_string(n));
        require(b_.size() == static_cast<std::size_t>(2 * n), ErrorKind::InvalidChannel,
                "expected " + std::to_string(2 * n) + " coefficients, got " + std::to_string(b_.size()));
        for (std::size_t p = 0; p < b_.size(); ++p)
            require(std::isfinite(b_[p]) && b_[p] >= 0.0 && b_[p] <= 1.0, ErrorKind::InvalidChannel,
                    "b[" + std::to_string(p) + "] = " + std::to_string(b_[p]) + " outside [0, 1]");
        scale_.resize(std::size_t{1} << (2 * n));
        for (BitString x = 0; x < scale_.size(); ++x) {
            double s = 1.0;
            for (int p = 0; p < 2 * n; ++p)
                if ((x >> p) & 1u) s *= b_[p];
            scale_[x] = s;
        }
    }

    static FermionicProductChannel uniform(int n, double b) {
        return FermionicProductChannel(n, std::vector<double>(2 * n, b));
    }

    int modes() const noexcept { return n_; }
    std::size_t hilbert_dim() const noexcept { return std::size_t{1} << n_; }
    const std::vector<double>& coefficients() const noexcept { return b_; }

    /// prod_{p : x_p = 1} b_p
    double monomial_scale(BitString x) const { return scale_.at(x); }

    ComplexMatrix apply(const ComplexMatrix& a) const;
    ComplexMatrix adjoint(const ComplexMatrix& a) const;

private:
    int n_;
    std::vector<double> b_;
    std::vector<double> scale_;
};

inline void check_operator_dim(const ComplexMatrix& a, std::size_t d) {
    require(a.rows() == d && a.cols() == d, ErrorKind::DimensionMismatch,
            "operator is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                ", channel acts on dimension " + std::to_string(d));
}

/// p(x) over all 2n-bit strings, indexed by x.
inline std::vector<double> kraus_distribution(const FermionicProductChannel& ch) {
    const int n = ch.modes();
    const auto& b = ch.coefficients();
    std::vector<double> p(std::size_t{1} << (2 * n));
    const double norm = std::ldexp(1.0, -2 * n);
    for (BitString x = 0; x < p.size(); ++x) {
        const int w = hamming_weight(x);
        double prod = norm;
        for (int q = 0; q < 2 * n; ++q) {
            const int xq = (x >> q) & 1;
            prod *= ((w + xq) % 2 == 0) ? (1.0 + b[q]) : (1.0 - b[q]);
        }
        p[x] = prod;
    }
    return p;
}

/**
 * Moment-space route: expand A = 2^{-n} sum_x Tr(c(x)^dagger A) c(x), scale each
 * coefficient, reassemble. Linear in A, so it accepts any operator.
 */
inline ComplexMatrix apply_product(const FermionicProductChannel& ch, const ComplexMatrix& a) {
    const std::size_t d = ch.hilbert_dim();
    check_operator_dim(a, d);
    const auto& table = monomial_table(ch.modes());
    ComplexMatrix out(d, d);
    const double inv_d = 1.0 / static_cast<double>(d);
    for (BitString x = 0; x < table.size(); ++x) {
        const double s = ch.monomial_scale(x);
        if (s == 0.0) continue;
        const PauliString& p = table[x];
        const Complex coeff = trace_product(p.adjoint(), a) * (s * inv_d);
        if (coeff == Complex{}) continue;
        add_scaled(out, coeff, p);
    }
    return out;
}

inline DensityOperator apply_product(const FermionicProductChannel& ch, const DensityOperator& rho) {
    return DensityOperator(apply_product(ch, rho.matrix()));
}

/// sum_x p(x) c(x) A c(x)^dagger
inline ComplexMatrix apply_kraus(const FermionicProductChannel& ch, const ComplexMatrix& a) {
    const std::size_t d = ch.hilbert_dim();
    check_operator_dim(a, d);
    const auto p = kraus_distribution(ch);
    const auto& table = monomial_table(ch.modes());
    ComplexMatrix out(d, d);
    for (BitString x = 0; x < table.size(); ++x)
        if (p[x] != 0.0) accumulate_conjugate(out, p[x], table[x], a);
    return out;
}

/// sum_x p(x) c(x)^dagger A c(x)
inline ComplexMatrix adjoint_apply(const FermionicProductChannel& ch, const ComplexMatrix& a) {
    const std::size_t d = ch.hilbert_dim();
    check_operator_dim(a, d);
    const auto p = kraus_distribution(ch);
    const auto& table = monomial_table(ch.modes());
    ComplexMatrix out(d, d);
    for (BitString x = 0; x < table.size(); ++x)
        if (p[x] != 0.0) accumulate_conjugate(out, p[x], table[x].adjoint(), a);
    return out;
}

inline ComplexMatrix FermionicProductChannel::apply(const ComplexMatrix& a) const {
    return apply_product(*this, a);
}

inline ComplexMatrix FermionicProductChannel::adjoint(const ComplexMatrix& a) const {
    return adjoint_apply(*this, a);
}

/// Channel on n+1 modes with coefficients (b_1, ..., b_2n, 1, 0).
inline FermionicProductChannel embed_hat(const FermionicProductChannel& ch) {
    auto b = ch.coefficients();
    b.push_back(1.0);
    b.push_back(0.0);
    return FermionicProductChannel(ch.modes() + 1, std::move(b));
}

/**
 * Adds one maximally mixed mode and rotates with V = exp(i pi/4 c_{2n+1}):
 * E(rho) = V (rho x I/2) V^dagger. The new qubit is the least significant factor.
 */
inline ComplexMatrix embed_mode(const ComplexMatrix& rho) {
    require(rho.is_square() && std::has_single_bit(rho.rows()), ErrorKind::DimensionMismatch,
            "operator dimension must be a power of two");
    const int n = std::countr_zero(rho.rows());
    ComplexMatrix half = ComplexMatrix::identity(2) * Complex{0.5};
    const ComplexMatrix extended = kron(rho, half);
    // V = cos(pi/4) I + i sin(pi/4) c_{2n+1}
    const double r = std::sqrt(0.5);
    ComplexMatrix v = ComplexMatrix::identity(extended.rows()) * Complex{r};
    add_scaled(v, Complex{0.0, r}, generator_pauli(2 * n + 1, n + 1));
    return v * extended * v.adjoint();
}

inline DensityOperator embed_mode(const DensityOperator& rho) { return DensityOperator(embed_mode(rho.matrix())); }

// ---------------------------------------------------------------------------

inline constexpr double kTracePreservationTol = 1e-10;

/**
 * Arbitrary channel in Kraus form. Operators with a single non-zero per row
 * (Pauli strings, signed permutations) are applied in O(d^2).
 */
class GeneralKraussChannel {
public:
    GeneralKraussChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops)
        : dim_(dim), ops_(std::move(kraus_ops)) {
        require(!ops_.empty(), ErrorKind::InvalidChannel, "empty Kraus set");
        ComplexMatrix sum(dim_, dim_);
        for (const auto& k : ops_) {
            require(k.rows() == dim_ && k.cols() == dim_, ErrorKind::InvalidChannel,
                    "Kraus operator has wrong dimension");
            sum += k.adjoint() * k;
        }
        const double err = max_abs_diff(sum, ComplexMatrix::identity(dim_));
        require(err <= kTracePreservationTol, ErrorKind::InvalidChannel,
                "sum K^dagger K differs from identity by " + std::to_string(err));
        sparse_.reserve(ops_.size());
        for (const auto& k : ops_) sparse_.push_back(monomial_form(k));
    }

    std::size_t hilbert_dim() const noexcept { return dim_; }
    const std::vector<ComplexMatrix>& kraus_operators() const noexcept { return ops_; }

    ComplexMatrix apply(const ComplexMatrix& a) const { return accumulate(a, false); }
    ComplexMatrix adjoint(const ComplexMatrix& a) const { return accumulate(a, true); }

private:
    // row r of K holds value[r] at column col[r]
    struct MonomialForm {
        std::vector<std::size_t> col;
        std::vector<Complex> value;
    };

    static std::optional<MonomialForm> monomial_form(const ComplexMatrix& k) {
        MonomialForm f{std::vector<std::size_t>(k.rows()), std::vector<Complex>(k.rows())};
        std::vector<bool> used(k.cols(), false);
        for (std::size_t r = 0; r < k.rows(); ++r) {
            int nonzeros = 0;
            for (std::size_t c = 0; c < k.cols(); ++c) {
                if (k(r, c) == Complex{}) continue;
                if (++nonzeros > 1 || used[c]) return std::nullopt;
                used[c] = true;
                f.col[r] = c;
                f.value[r] = k(r, c);
            }
            if (nonzeros == 0) return std::nullopt;
        }
        return f;
    }

    ComplexMatrix accumulate(const ComplexMatrix& a, bool adjoint) const {
        check_operator_dim(a, dim_);
        ComplexMatrix out(dim_, dim_);
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            if (sparse_[i] && !adjoint) {
                // (K A K^dagger)_{rs} = k_r A_{c(r) c(s)} conj(k_s)
                const auto& f = *sparse_[i];
                for (std::size_t r = 0; r < dim_; ++r)
                    for (std::size_t s = 0; s < dim_; ++s)
                        out(r, s) += f.value[r] * a(f.col[r], f.col[s]) * std::conj(f.value[s]);
            } else if (sparse_[i]) {
                // (K^dagger A K)_{c(r) c(s)} = conj(k_r) A_{rs} k_s
                const auto& f = *sparse_[i];
                for (std::size_t r = 0; r < dim_; ++r)
                    for (std::size_t s = 0; s < dim_; ++s)
                        out(f.col[r], f.col[s]) += std::conj(f.value[r]) * a(r, s) * f.value[s];
            } else if (!adjoint) {
                out += ops_[i] * a * ops_[i].adjoint();
            } else {
                out += ops_[i].adjoint() * a * ops_[i];
            }
        }
        return out;
    }

    std::size_t dim_;
    std::vector<ComplexMatrix> ops_;
    std::vector<std::optional<MonomialForm>> sparse_;
};

inline ComplexMatrix apply_kraus(const GeneralKraussChannel& ch, const ComplexMatrix& a) { return ch.apply(a); }

inline ComplexMatrix adjoint_apply(const GeneralKraussChannel& ch, const ComplexMatrix& a) {
    return ch.adjoint(a);
}

template <typename Channel>
DensityOperator apply_kraus(const Channel& ch, const DensityOperator& rho) {
    return DensityOperator(apply_kraus(ch, rho.matrix()));
}

/// Kraus form of a fermionic product channel: sqrt(p(x)) c(x).
inline GeneralKraussChannel to_kraus_channel(const FermionicProductChannel& ch) {
    const auto p = kraus_distribution(ch);
    const auto& table = monomial_table(ch.modes());
    std::vector<ComplexMatrix> ops;
    for (BitString x = 0; x < table.size(); ++x)
        if (p[x] > 0.0) ops.push_back(table[x].dense() * Complex{std::sqrt(p[x])});
    return GeneralKraussChannel(ch.hilbert_dim(), std::move(ops));
}

/// One-qubit Pauli channel: X, Y, Z errors with probability p each.
inline GeneralKraussChannel depolarizing_channel(double p) {
    require(p >= 0.0 && 3.0 * p <= 1.0, ErrorKind::InvalidChannel, "depolarizing probability outside [0, 1/3]");
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    y(0, 1) = Complex{0.0, -1.0};
    y(1, 0) = Complex{0.0, 1.0};
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const double s = std::sqrt(p);
    return GeneralKraussChannel(2, {ComplexMatrix::identity(2) * Complex{std::sqrt(1.0 - 3.0 * p)},
                                    x * Complex{s}, y * Complex{s}, z * Complex{s}});
}

/// Theta^{(x) k} with Kraus operators all k-fold tensor products.
inline GeneralKraussChannel tensor_power(const GeneralKraussChannel& ch, int k) {
    require(k >= 1, ErrorKind::InvalidChannel, "tensor power must be positive");
    std::vector<ComplexMatrix> ops = ch.kraus_operators();
    std::size_t dim = ch.hilbert_dim();
    for (int i = 1; i < k; ++i) {
        std::vector<ComplexMatrix> next;
        next.reserve(ops.size() * ch.kraus_operators().size());
        for (const auto& a : ops)
            for (const auto& b : ch.kraus_operators()) next.push_back(kron(a, b));
        ops = std::move(next);
        dim *= ch.hilbert_dim();
    }
    return GeneralKraussChannel(dim, std::move(ops));
}

/// Anything the minimizer can drive: forward map and its trace-dual.
template <typename C>
concept QuantumChannel = requires(const C& ch, const ComplexMatrix& a) {
    { ch.hilbert_dim() } -> std::convertible_to<std::size_t>;
    { ch.apply(a) } -> std::same_as<ComplexMatrix>;
    { ch.adjoint(a) } -> std::same_as<ComplexMatrix>;
};

static_assert(QuantumChannel<FermionicProductChannel>);
static_assert(QuantumChannel<GeneralKraussChannel>);

}  // namespace fermicap
