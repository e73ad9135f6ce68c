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
 * @brief Majorana operators c_1..c_2n in the Jordan-Wigner representation.
 *
 *   c_{2j-1} = Z x ... x Z x X_j x I x ... x I
 *   c_{2j}   = Z x ... x Z x Y_j x I x ... x I
 *
 * Qubit 1 is the most significant tensor factor, i.e. qubit k is bit (n - k)
 * of a computational basis index. Monomials c(x) = c_1^{x_1} ... c_2n^{x_2n}
 * are stored as a 2n-bit mask with bit (p - 1) standing for c_p.
 */

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "fermicap/error.hpp"
#include "fermicap/numerics.hpp"

namespace fermicap {

inline constexpr int kMaxModes = 5;

using BitString = std::uint32_t;

/// i^k for k taken mod 4.
inline Complex phase_value(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

inline int hamming_weight(BitString x) { return std::popcount(x); }

inline void check_mode_count(int n) {
    require(n >= 1 && n <= kMaxModes, ErrorKind::OutOfRange,
            "mode count must be in [1, " + std::to_string(kMaxModes) + "], got " + std::to_string(n));
}

/**
 * i^phase * X^{x_mask} Z^{z_mask}: Z acts first, then X. Masks are indexed by
 * computational-basis bits (qubit k <-> bit n - k). Every such operator has
 * exactly one non-zero per row and column, which the sparse helpers exploit.
 */
struct PauliString {
    int n = 0;
    std::uint32_t x_mask = 0;
    std::uint32_t z_mask = 0;
    int phase = 0;

    std::size_t dim() const { return std::size_t{1} << n; }

    /// Value of the non-zero entry in column c, which sits in row c ^ x_mask.
    Complex column_value(std::size_t c) const {
        const int sign = std::popcount(static_cast<std::uint32_t>(c) & z_mask) & 1;
        return phase_value(phase + 2 * sign);
    }

    PauliString adjoint() const {
        // (X^x Z^z)^dagger = Z^z X^x = (-1)^{|x & z|} X^x Z^z
        return {n, x_mask, z_mask, ((-phase + 2 * std::popcount(x_mask & z_mask)) % 4 + 4) % 4};
    }

    friend PauliString operator*(const PauliString& a, const PauliString& b) {
        require(a.n == b.n, ErrorKind::DimensionMismatch, "Pauli strings on different qubit counts");
        const int sign = std::popcount(a.z_mask & b.x_mask) & 1;
        return {a.n, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask, (a.phase + b.phase + 2 * sign) % 4};
    }

    friend bool operator==(const PauliString&, const PauliString&) = default;

    /// Per-qubit letters, qubit 1 first, with the global phase folded into i^phase'.
    std::string letters() const {
        std::string s;
        int extra = 0;
        for (int k = 1; k <= n; ++k) {
            const std::uint32_t bit = 1u << (n - k);
            const bool x = x_mask & bit;
            const bool z = z_mask & bit;
            if (x && z) {
                s += 'Y';  // XZ = -iY
                extra += 3;
            } else if (x) {
                s += 'X';
            } else if (z) {
                s += 'Z';
            } else {
                s += 'I';
            }
        }
        static constexpr std::array<const char*, 4> prefix{"+", "+i", "-", "-i"};
        return std::string(prefix[((phase + extra) % 4 + 4) % 4]) + s;
    }

    ComplexMatrix dense() const {
        ComplexMatrix m(dim(), dim());
        for (std::size_t c = 0; c < dim(); ++c) m(c ^ x_mask, c) = column_value(c);
        return m;
    }
};

/// P A P^dagger in O(d^2).
inline ComplexMatrix conjugate(const PauliString& p, const ComplexMatrix& a) {
    const std::size_t d = p.dim();
    require(a.rows() == d && a.cols() == d, ErrorKind::DimensionMismatch, "operator dimension mismatch");
    ComplexMatrix out(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        const std::size_t rs = r ^ p.x_mask;
        const Complex vr = p.column_value(rs);
        for (std::size_t s = 0; s < d; ++s) {
            const std::size_t ss = s ^ p.x_mask;
            out(r, s) = vr * a(rs, ss) * std::conj(p.column_value(ss));
        }
    }
    return out;
}

/// out += coeff * P A P^dagger
inline void accumulate_conjugate(ComplexMatrix& out, Complex coeff, const PauliString& p,
                                 const ComplexMatrix& a) {
    const std::size_t d = p.dim();
    std::vector<Complex> v(d);
    for (std::size_t c = 0; c < d; ++c) v[c] = p.column_value(c);
    for (std::size_t r = 0; r < d; ++r) {
        const std::size_t rs = r ^ p.x_mask;
        const Complex vr = coeff * v[rs];
        for (std::size_t s = 0; s < d; ++s) {
            const std::size_t ss = s ^ p.x_mask;
            out(r, s) += vr * a(rs, ss) * std::conj(v[ss]);
        }
    }
}

/// Tr(P A)
inline Complex trace_product(const PauliString& p, const ComplexMatrix& a) {
    Complex t{};
    for (std::size_t c = 0; c < p.dim(); ++c) t += p.column_value(c) * a(c, c ^ p.x_mask);
    return t;
}

/// out += coeff * P
inline void add_scaled(ComplexMatrix& out, Complex coeff, const PauliString& p) {
    for (std::size_t c = 0; c < p.dim(); ++c) out(c ^ p.x_mask, c) += coeff * p.column_value(c);
}

// ---------------------------------------------------------------------------

/// phase * c_1^{x_1} ... c_2n^{x_2n}, phase = i^k.
struct MajoranaMonomial {
    int n = 1;
    BitString x = 0;
    int phase = 0;

    Complex phase_factor() const { return phase_value(phase); }
    int weight() const { return hamming_weight(x); }
    bool has(int p) const { return (x >> (p - 1)) & 1u; }

    friend bool operator==(const MajoranaMonomial&, const MajoranaMonomial&) = default;
};

inline MajoranaMonomial make_monomial(int n, BitString x, int phase = 0) {
    check_mode_count(n);
    require(x < (BitString{1} << (2 * n)), ErrorKind::IndexOutOfRange, "bit string longer than 2n");
    return {n, x, ((phase % 4) + 4) % 4};
}

/// Generator c_p, p in 1..2n.
inline PauliString generator_pauli(int p, int n) {
    check_mode_count(n);
    require(p >= 1 && p <= 2 * n, ErrorKind::IndexOutOfRange,
            "generator index " + std::to_string(p) + " outside 1.." + std::to_string(2 * n));
    const int j = (p + 1) / 2;  // qubit
    const std::uint32_t qubit_bit = 1u << (n - j);
    std::uint32_t z_string = 0;
    for (int k = 1; k < j; ++k) z_string |= 1u << (n - k);
    if (p % 2 == 1) return {n, qubit_bit, z_string, 0};
    // Y = i X Z
    return {n, qubit_bit, z_string | qubit_bit, 1};
}

inline ComplexMatrix generator_matrix(int p, int n) { return generator_pauli(p, n).dense(); }

inline PauliString to_pauli(const MajoranaMonomial& m) {
    check_mode_count(m.n);
    PauliString out{m.n, 0, 0, m.phase};
    for (int p = 1; p <= 2 * m.n; ++p)
        if (m.has(p)) out = out * generator_pauli(p, m.n);
    return out;
}

/**
 * Inverse of to_pauli. The mask map x -> (x_mask, z_mask) is linear over GF(2):
 * qubit j carries an X iff exactly one of c_{2j-1}, c_{2j} is present, and a Z
 * iff c_{2j} is present xor an odd number of X-type letters sit on later qubits.
 */
inline MajoranaMonomial to_monomial(const PauliString& ps) {
    check_mode_count(ps.n);
    const int n = ps.n;
    BitString x = 0;
    int later_parity = 0;
    for (int j = n; j >= 1; --j) {
        const std::uint32_t bit = 1u << (n - j);
        const int xb = (ps.x_mask & bit) ? 1 : 0;
        const int zb = (ps.z_mask & bit) ? 1 : 0;
        const int even = zb ^ later_parity;
        const int odd = xb ^ even;
        if (odd) x |= BitString{1} << (2 * j - 2);
        if (even) x |= BitString{1} << (2 * j - 1);
        later_parity ^= xb;
    }
    const PauliString bare = to_pauli({n, x, 0});
    return {n, x, ((ps.phase - bare.phase) % 4 + 4) % 4};
}

inline ComplexMatrix monomial_matrix(const MajoranaMonomial& m) { return to_pauli(m).dense(); }

/**
 * c(a) c(b) reordered to canonical ascending order. Moving each generator of b
 * to the left past every larger-index generator of a costs one sign each;
 * coinciding generators then square to identity.
 */
inline MajoranaMonomial monomial_product(const MajoranaMonomial& a, const MajoranaMonomial& b) {
    require(a.n == b.n, ErrorKind::DimensionMismatch, "monomials on different mode counts");
    int swaps = 0;
    for (int p = 1; p <= 2 * a.n; ++p) {
        if (!b.has(p)) continue;
        swaps += hamming_weight(a.x >> p);  // generators of a with index > p
    }
    return {a.n, a.x ^ b.x, (a.phase + b.phase + 2 * (swaps & 1)) % 4};
}

/// Hermitian conjugate: reversing |x| anticommuting generators gives (-1)^{|x|(|x|-1)/2}.
inline MajoranaMonomial monomial_adjoint(const MajoranaMonomial& m) {
    const int w = m.weight();
    const int reversal = (w * (w - 1) / 2) & 1;
    return {m.n, m.x, ((-m.phase + 2 * reversal) % 4 + 4) % 4};
}

/// P = (-i)^n c_1 c_2 ... c_2n, which equals Z x ... x Z.
inline MajoranaMonomial parity_monomial(int n) {
    check_mode_count(n);
    return {n, (BitString{1} << (2 * n)) - 1, (3 * n) % 4};
}

inline ComplexMatrix parity_operator(int n) { return monomial_matrix(parity_monomial(n)); }

/**
 * Pauli representations of all 4^n monomials c(x) with unit phase, indexed by x.
 * Built once per mode count.
 */
inline const std::vector<PauliString>& monomial_table(int n) {
    check_mode_count(n);
    static std::array<std::vector<PauliString>, kMaxModes + 1> tables;
    static std::array<std::once_flag, kMaxModes + 1> flags;
    std::call_once(flags[n], [n] {
        auto& t = tables[n];
        const BitString count = BitString{1} << (2 * n);
        t.reserve(count);
        for (BitString x = 0; x < count; ++x) t.push_back(to_pauli({n, x, 0}));
    });
    return tables[n];
}

}  // namespace fermicap
