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


#include <gtest/gtest.h>

#include "fermicap/clifford.hpp"

namespace fermicap {
namespace {

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

TEST(Generators, OneModeIsXAndY) {
    EXPECT_EQ(generator_pauli(1, 1).letters(), "+X");
    EXPECT_EQ(generator_pauli(2, 1).letters(), "+Y");
}

TEST(Generators, TwoModeJordanWignerStrings) {
    EXPECT_EQ(generator_pauli(1, 2).letters(), "+XI");
    EXPECT_EQ(generator_pauli(2, 2).letters(), "+YI");
    EXPECT_EQ(generator_pauli(3, 2).letters(), "+ZX");
    EXPECT_EQ(generator_pauli(4, 2).letters(), "+ZY");
}

TEST(Generators, CanonicalAnticommutationUpToFiveModes) {
    for (int n = 1; n <= kMaxModes; ++n) {
        const std::size_t d = std::size_t{1} << n;
        for (int p = 1; p <= 2 * n; ++p) {
            const ComplexMatrix cp = generator_matrix(p, n);
            EXPECT_EQ(hermiticity_defect(cp), 0.0);
            for (int q = p; q <= 2 * n; ++q) {
                const ComplexMatrix expected = ComplexMatrix::identity(d) * Complex{p == q ? 2.0 : 0.0};
                EXPECT_EQ(max_abs_diff(anticommutator(cp, generator_matrix(q, n)), expected), 0.0)
                    << "n=" << n << " p=" << p << " q=" << q;
            }
        }
    }
}

TEST(Generators, IndexOutsideRangeThrows) {
    try {
        generator_pauli(5, 2);
        FAIL() << "expected IndexOutOfRange";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
    EXPECT_THROW(generator_pauli(0, 2), Error);
    EXPECT_THROW(generator_pauli(1, kMaxModes + 1), Error);
}

TEST(Monomials, TableHasFourToTheNEntriesAndMatchesProducts) {
    for (int n = 1; n <= 3; ++n) {
        const auto& table = monomial_table(n);
        ASSERT_EQ(table.size(), std::size_t{1} << (2 * n));
        for (BitString x = 0; x < table.size(); ++x) {
            ComplexMatrix product = ComplexMatrix::identity(std::size_t{1} << n);
            for (int p = 1; p <= 2 * n; ++p)
                if ((x >> (p - 1)) & 1u) product = product * generator_matrix(p, n);
            EXPECT_EQ(max_abs_diff(table[x].dense(), product), 0.0) << "x=" << x;
        }
    }
}

TEST(Monomials, ProductMatchesDenseMultiplication) {
    for (int n = 1; n <= 3; ++n) {
        const BitString count = BitString{1} << (2 * n);
        for (BitString x = 0; x < count; ++x)
            for (BitString y = 0; y < count; ++y) {
                const auto a = make_monomial(n, x, static_cast<int>(x % 4));
                const auto b = make_monomial(n, y, static_cast<int>(y % 3));
                const auto ab = monomial_product(a, b);
                EXPECT_EQ(ab.x, x ^ y);
                EXPECT_LE(max_abs_diff(monomial_matrix(ab), monomial_matrix(a) * monomial_matrix(b)), 1e-15);
            }
    }
}

TEST(Monomials, AdjointMatchesDenseAdjoint) {
    for (BitString x = 0; x < 64; ++x) {
        const auto m = make_monomial(3, x, 1);
        EXPECT_LE(max_abs_diff(monomial_matrix(monomial_adjoint(m)), monomial_matrix(m).adjoint()), 1e-15);
    }
}

TEST(Monomials, PauliRoundTrip) {
    for (int n = 1; n <= kMaxModes; ++n) {
        const BitString count = BitString{1} << (2 * n);
        for (BitString x = 0; x < count; x += (n > 3 ? 7 : 1))
            for (int phase = 0; phase < 4; ++phase) {
                const auto m = make_monomial(n, x, phase);
                EXPECT_EQ(to_monomial(to_pauli(m)), m);
            }
    }
}

TEST(Monomials, TraceOrthogonality) {
    const int n = 2;
    const auto& table = monomial_table(n);
    for (BitString x = 0; x < table.size(); ++x)
        for (BitString y = 0; y < table.size(); ++y) {
            const Complex t = trace(table[x].dense().adjoint() * table[y].dense());
            EXPECT_LE(std::abs(t - Complex{x == y ? 4.0 : 0.0}), 1e-15);
        }
}

TEST(Monomials, BitStringTooLongThrows) { EXPECT_THROW(make_monomial(1, 0b100), Error); }

TEST(Parity, IsProductOfZ) {
    EXPECT_EQ(to_pauli(parity_monomial(1)).letters(), "+Z");
    EXPECT_EQ(to_pauli(parity_monomial(3)).letters(), "+ZZZ");
    for (int n = 1; n <= kMaxModes; ++n) {
        const auto p = parity_operator(n);
        for (std::size_t i = 0; i < p.rows(); ++i) {
            const double expected = (std::popcount(i) % 2 == 0) ? 1.0 : -1.0;
            EXPECT_EQ(p(i, i), Complex{expected});
        }
    }
}

TEST(Parity, GradesMonomialsByWeight) {
    const int n = 3;
    const ComplexMatrix p = parity_operator(n);
    for (const auto& ps : monomial_table(n)) {
        const ComplexMatrix m = ps.dense();
        const double sign = (hamming_weight(to_monomial(ps).x) % 2 == 0) ? 1.0 : -1.0;
        EXPECT_EQ(max_abs_diff(p * m * p, m * Complex{sign}), 0.0);
    }
}

TEST(PauliString, SparseHelpersMatchDense) {
    const auto& table = monomial_table(2);
    ComplexMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = Complex{double(i + 2 * j), double(i) - double(j)};
    for (const auto& p : table) {
        const ComplexMatrix dense = p.dense();
        EXPECT_LE(max_abs_diff(conjugate(p, a), dense * a * dense.adjoint()), 1e-13);
        EXPECT_LE(std::abs(trace_product(p, a) - trace(dense * a)), 1e-13);
        ComplexMatrix acc(4, 4);
        accumulate_conjugate(acc, Complex{0.5}, p, a);
        EXPECT_LE(max_abs_diff(acc, dense * a * dense.adjoint() * Complex{0.5}), 1e-13);
    }
}

TEST(ModeCount, RejectsOutOfRange) {
    EXPECT_THROW(check_mode_count(0), Error);
    EXPECT_THROW(check_mode_count(kMaxModes + 1), Error);
    EXPECT_NO_THROW(check_mode_count(kMaxModes));
}

}  // namespace
}  // namespace fermicap
