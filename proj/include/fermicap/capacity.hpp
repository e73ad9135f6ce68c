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
 * @brief Closed-form Gaussian capacity of fermionic product channels.
 *
 * With b sorted descending (1-based):
 *
 *   S_min,e = sum_{j=1}^{n}   H((1 + b_{2j-1} b_{2j}) / 2)
 *   S_min,g = H((1 + b_1) / 2) + sum_{j=1}^{n-1} H((1 + b_{2j} b_{2j+1}) / 2)
 *   C_1^g   = n - S_min,g
 *
 * All entropies are in bits.
 */

#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fermicap/channel.hpp"
#include "fermicap/clifford.hpp"
#include "fermicap/error.hpp"
#include "fermicap/gaussian.hpp"
#include "fermicap/numerics.hpp"

namespace fermicap {

inline void check_coefficients(std::span<const double> b) {
    require(!b.empty() && b.size() % 2 == 0, ErrorKind::InvalidChannel,
            "need 2n coefficients, got " + std::to_string(b.size()));
    for (double v : b)
        require(v >= 0.0 && v <= 1.0, ErrorKind::InvalidChannel,
                "coefficient " + std::to_string(v) + " outside [0, 1]");
}

inline std::vector<double> sorted_descending(std::span<const double> b) {
    std::vector<double> s(b.begin(), b.end());
    std::stable_sort(s.begin(), s.end(), std::greater<>());
    return s;
}

/// Minimum output entropy over even Gaussian inputs.
inline double smin_even(std::span<const double> b) {
    check_coefficients(b);
    const auto s = sorted_descending(b);
    double total = 0.0;
    for (std::size_t j = 0; j < s.size() / 2; ++j)
        total += binary_entropy(0.5 * (1.0 + s[2 * j] * s[2 * j + 1]));
    return total;
}

/// Minimum output entropy over all Gaussian inputs.
inline double smin_gaussian(std::span<const double> b) {
    check_coefficients(b);
    const auto s = sorted_descending(b);
    const std::size_t n = s.size() / 2;
    double total = binary_entropy(0.5 * (1.0 + s[0]));
    for (std::size_t j = 1; j < n; ++j) total += binary_entropy(0.5 * (1.0 + s[2 * j - 1] * s[2 * j]));
    return total;
}

struct CapacityReport {
    int n = 0;
    std::vector<double> sorted_b;
    double smin_even = 0.0;
    double smin_gaussian = 0.0;
    double c1_gaussian = 0.0;
};

inline CapacityReport gaussian_capacity(std::span<const double> b) {
    CapacityReport r;
    r.n = static_cast<int>(b.size() / 2);
    r.sorted_b = sorted_descending(b);
    r.smin_even = smin_even(b);
    r.smin_gaussian = smin_gaussian(b);
    r.c1_gaussian = static_cast<double>(r.n) - r.smin_gaussian;
    return r;
}

inline CapacityReport gaussian_capacity(const FermionicProductChannel& ch) {
    return gaussian_capacity(ch.coefficients());
}

// ---------------------------------------------------------------------------

/// Generator indices (1-based) ordered by descending coefficient, ties stable.
inline std::vector<int> descending_mode_order(std::span<const double> b) {
    std::vector<int> order(b.size());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return b[p - 1] > b[q - 1]; });
    return order;
}

namespace detail {

/**
 * 2^{-n} (I + s_0 c_{o1}) prod_{j=1}^{n-1} (I + s_j (-i) c_{o(2j)} c_{o(2j+1)})
 * expanded into monomials. The factors commute, each is twice a rank-2^{n-1}
 * projector, so the product is a rank-one projector.
 */
inline ComplexMatrix signed_product_state(std::span<const int> order, std::span<const int> signs) {
    const int n = static_cast<int>(order.size() / 2);
    std::vector<MajoranaMonomial> terms;
    terms.reserve(n);
    const auto single = [n](int p) { return MajoranaMonomial{n, BitString{1} << (p - 1), 0}; };
    terms.push_back(MajoranaMonomial{n, single(order[0]).x, signs[0] > 0 ? 0 : 2});
    for (int j = 1; j < n; ++j) {
        MajoranaMonomial pair = monomial_product(single(order[2 * j - 1]), single(order[2 * j]));
        pair.phase = (pair.phase + 3 + (signs[j] > 0 ? 0 : 2)) % 4;  // times -i, times sign
        terms.push_back(pair);
    }
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix rho(d, d);
    const double norm = 1.0 / static_cast<double>(d);
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        MajoranaMonomial m{n, 0, 0};
        for (int j = 0; j < n; ++j)
            if ((subset >> j) & 1u) m = monomial_product(m, terms[j]);
        add_scaled(rho, norm, to_pauli(m));
    }
    return rho;
}

}  // namespace detail

struct OptimalInput {
    DensityOperator state;
    CovarianceMatrix covariance;     // second moments
    std::vector<double> first_moment;  // Tr(rho c_p)
};

/**
 * Minimizer of the output entropy over Gaussian inputs for a channel whose
 * coefficients are b. The canonical state 2^{-n}(I + c_1)(I - i c_2 c_3)...
 * corresponds to b already sorted; otherwise modes are relabelled by the
 * descending order of b.
 */
inline OptimalInput optimal_input_state(std::span<const double> b) {
    check_coefficients(b);
    const int n = static_cast<int>(b.size() / 2);
    check_mode_count(n);
    const auto order = descending_mode_order(b);
    const std::vector<int> signs(n, 1);

    RealMatrix m(2 * n, 2 * n);
    for (int j = 1; j < n; ++j) {
        const int a = order[2 * j - 1] - 1;
        const int c = order[2 * j] - 1;
        m(a, c) = 1.0;
        m(c, a) = -1.0;
    }
    std::vector<double> d(2 * n, 0.0);
    d[order[0] - 1] = 1.0;
    return {DensityOperator(detail::signed_product_state(order, signs)), CovarianceMatrix(m), std::move(d)};
}

inline OptimalInput optimal_input_state(int n) {
    check_mode_count(n);
    return optimal_input_state(std::vector<double>(2 * n, 1.0));
}

inline OptimalInput optimal_input_state(const FermionicProductChannel& ch) {
    return optimal_input_state(ch.coefficients());
}

// ---------------------------------------------------------------------------

inline constexpr double kProbabilityTol = 1e-12;

class SignalEnsemble {
public:
    SignalEnsemble(std::vector<double> probabilities, std::vector<DensityOperator> states)
        : p_(std::move(probabilities)), states_(std::move(states)) {
        require(!p_.empty() && p_.size() == states_.size(), ErrorKind::LengthMismatch,
                "ensemble needs one probability per state");
        double total = 0.0;
        for (double v : p_) {
            require(v >= 0.0, ErrorKind::OutOfRange, "negative probability");
            total += v;
        }
        require(std::abs(total - 1.0) <= kProbabilityTol, ErrorKind::OutOfRange,
                "probabilities sum to " + std::to_string(total));
        for (const auto& s : states_)
            require(s.dim() == states_.front().dim(), ErrorKind::DimensionMismatch,
                    "ensemble states of different dimension");
    }

    std::size_t size() const noexcept { return p_.size(); }
    const std::vector<double>& probabilities() const noexcept { return p_; }
    const std::vector<DensityOperator>& states() const noexcept { return states_; }

    ComplexMatrix average() const {
        ComplexMatrix avg(states_.front().dim(), states_.front().dim());
        for (std::size_t a = 0; a < p_.size(); ++a) avg += states_[a].matrix() * Complex{p_[a]};
        return avg;
    }

private:
    std::vector<double> p_;
    std::vector<DensityOperator> states_;
};

/// The 2^n equiprobable states 2^{-n}(I +- c_1)(I +- i c_2 c_3)..., modes relabelled by descending b.
inline SignalEnsemble optimal_ensemble(std::span<const double> b) {
    check_coefficients(b);
    const int n = static_cast<int>(b.size() / 2);
    check_mode_count(n);
    const auto order = descending_mode_order(b);
    std::vector<double> probs;
    std::vector<DensityOperator> states;
    for (unsigned pattern = 0; pattern < (1u << n); ++pattern) {
        std::vector<int> signs(n);
        for (int j = 0; j < n; ++j) signs[j] = ((pattern >> j) & 1u) ? -1 : 1;
        states.emplace_back(detail::signed_product_state(order, signs));
        probs.push_back(1.0 / static_cast<double>(1u << n));
    }
    return SignalEnsemble(std::move(probs), std::move(states));
}

inline SignalEnsemble optimal_ensemble(int n) {
    check_mode_count(n);
    return optimal_ensemble(std::vector<double>(2 * n, 1.0));
}

/// chi = S(Phi(sum p_a rho_a)) - sum p_a S(Phi(rho_a)), in bits.
template <QuantumChannel Channel>
double holevo_quantity(const SignalEnsemble& ens, const Channel& ch) {
    require(ens.states().front().dim() == ch.hilbert_dim(), ErrorKind::DimensionMismatch,
            "ensemble and channel dimensions differ");
    double avg_entropy = 0.0;
    for (std::size_t a = 0; a < ens.size(); ++a)
        avg_entropy += ens.probabilities()[a] * von_neumann_entropy(ch.apply(ens.states()[a].matrix()));
    return von_neumann_entropy(ch.apply(ens.average())) - avg_entropy;
}

}  // namespace fermicap
