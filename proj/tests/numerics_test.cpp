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

#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "fermicap/numerics.hpp"
#include "fermicap/sampling.hpp"

namespace fermicap {
namespace {

// Pfaffian straight from the perfect-matching expansion, used as an oracle.
double pfaffian_by_matchings(const RealMatrix& a, std::vector<std::size_t> idx) {
    if (idx.empty()) return 1.0;
    const std::size_t first = idx.front();
    double total = 0.0;
    for (std::size_t k = 1; k < idx.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t m = 1; m < idx.size(); ++m)
            if (m != k) rest.push_back(idx[m]);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        total += sign * a(first, idx[k]) * pfaffian_by_matchings(a, rest);
    }
    return total;
}

RealMatrix omega_blocks(std::vector<double> scale) {
    RealMatrix m(2 * scale.size(), 2 * scale.size());
    for (std::size_t j = 0; j < scale.size(); ++j) {
        m(2 * j, 2 * j + 1) = scale[j];
        m(2 * j + 1, 2 * j) = -scale[j];
    }
    return m;
}

TEST(HermitianEig, IdentityHasUnitSpectrum) {
    const auto e = hermitian_eig(ComplexMatrix::identity(4));
    for (double v : e.values) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(HermitianEig, DiagonalInputIsSortedAscending) {
    const std::vector<double> diag{3.0, 1.0, 2.0};
    const auto e = hermitian_eig(to_complex(RealMatrix::diagonal(diag)));
    EXPECT_DOUBLE_EQ(e.values[0], 1.0);
    EXPECT_DOUBLE_EQ(e.values[1], 2.0);
    EXPECT_DOUBLE_EQ(e.values[2], 3.0);
    // eigenvector of 1 is e_2 up to phase
    EXPECT_NEAR(std::abs(e.vectors(1, 0)), 1.0, 1e-14);
}

TEST(HermitianEig, RandomMatricesReconstructAndStayUnitary) {
    Rng rng = make_rng(1);
    for (std::size_t d : {1u, 2u, 5u, 8u, 16u, 32u}) {
        const ComplexMatrix a = random_hermitian(d, rng);
        const auto e = hermitian_eig(a);
        const ComplexMatrix rec = spectral_apply(e, [](double v) { return v; });
        EXPECT_LE(max_abs_diff(rec, a), 1e-10 * std::max(1.0, max_abs(a))) << "dim " << d;
        EXPECT_LE(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(d)), 1e-10);
        EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
        for (std::size_t j = 0; j < d; ++j) {
            double resid = 0.0;
            for (std::size_t r = 0; r < d; ++r) {
                Complex av{};
                for (std::size_t c = 0; c < d; ++c) av += a(r, c) * e.vectors(c, j);
                resid = std::max(resid, std::abs(av - e.values[j] * e.vectors(r, j)));
            }
            EXPECT_LE(resid, 1e-10 * std::max(1.0, max_abs(a)));
        }
    }
}

TEST(HermitianEig, RejectsNonHermitianInput) {
    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0;
    try {
        hermitian_eig(a);
        FAIL() << "expected NotHermitian";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
}

TEST(HermitianEig, RealSymmetricInstantiation) {
    RealMatrix a(2, 2);
    a(0, 0) = 2.0;
    a(0, 1) = a(1, 0) = 1.0;
    a(1, 1) = 2.0;
    const auto e = hermitian_eig(a);
    EXPECT_NEAR(e.values[0], 1.0, 1e-14);
    EXPECT_NEAR(e.values[1], 3.0, 1e-14);
}

TEST(MatrixLog, DiagonalFunctionalCalculus) {
    const std::vector<double> d{1.0, std::exp(1.0)};
    const auto l = matrix_log_psd(to_complex(RealMatrix::diagonal(d)));
    EXPECT_NEAR(l(0, 0).real(), 0.0, 1e-15);
    EXPECT_NEAR(l(1, 1).real(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(l(0, 1)), 0.0, 1e-15);
}

TEST(MatrixLog, IdentityGivesZero) {
    EXPECT_LE(max_abs(matrix_log_psd(ComplexMatrix::identity(4))), 1e-15);
}

TEST(MatrixLog, FloorClampsZeroEigenvalue) {
    const std::vector<double> d{0.0, 1.0};
    const auto l = matrix_log_psd(to_complex(RealMatrix::diagonal(d)), 1e-30);
    EXPECT_NEAR(l(0, 0).real(), -30.0 * std::log(10.0), 1e-12);
    EXPECT_NEAR(l(1, 1).real(), 0.0, 1e-15);
}

TEST(MatrixLog, NegativeEigenvalueIsNotPsd) {
    const std::vector<double> d{-1e-6, 1.0};
    try {
        matrix_log_psd(to_complex(RealMatrix::diagonal(d)));
        FAIL() << "expected NotPSD";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPSD);
        EXPECT_TRUE(e.is_numerical());
    }
}

TEST(MatrixLog, TinyNegativeNoiseIsTolerated) {
    const std::vector<double> d{-1e-12, 1.0};
    EXPECT_NO_THROW(matrix_log_psd(to_complex(RealMatrix::diagonal(d))));
}

TEST(Pfaffian, TwoByTwo) {
    EXPECT_DOUBLE_EQ(pfaffian(omega_blocks({0.7})), 0.7);
}

TEST(Pfaffian, FourByFourExpansion) {
    RealMatrix m(4, 4);
    const double v[6] = {0.3, -1.2, 0.8, 2.5, -0.4, 1.7};  // m12 m13 m14 m23 m24 m34
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            m(i, j) = v[k++];
            m(j, i) = -m(i, j);
        }
    const double expected = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
    EXPECT_NEAR(pfaffian(m), expected, 1e-14);
}

TEST(Pfaffian, BlockDiagonalIsProduct) {
    EXPECT_NEAR(pfaffian(omega_blocks({0.5, -3.0})), -1.5, 1e-15);
}

TEST(Pfaffian, MatchesMatchingExpansionWithSign) {
    Rng rng = make_rng(2);
    for (std::size_t d : {2u, 4u, 6u, 8u}) {
        for (int t = 0; t < 10; ++t) {
            const auto m = random_antisymmetric(d, rng);
            std::vector<std::size_t> idx(d);
            std::iota(idx.begin(), idx.end(), 0);
            const double oracle = pfaffian_by_matchings(m.matrix(), idx);
            EXPECT_NEAR(pfaffian(m), oracle, 1e-10 * std::max(1.0, std::abs(oracle)));
        }
    }
}

TEST(Pfaffian, SquareIsDeterminantUpToSixteen) {
    Rng rng = make_rng(3);
    for (std::size_t d = 2; d <= 16; d += 2) {
        const auto m = random_antisymmetric(d, rng);
        const double pf = pfaffian(m);
        const double det = determinant(m.matrix());
        EXPECT_NEAR(pf * pf, det, 1e-8 * std::max(1.0, std::abs(det))) << "dim " << d;
    }
}

TEST(Pfaffian, RotationMultipliesByDeterminant) {
    Rng rng = make_rng(4);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = 2 * (1 + t % 6);
        const auto m = random_antisymmetric(d, rng);
        RealMatrix r = random_orthogonal(d, rng);
        if (t % 2)
            for (std::size_t c = 0; c < d; ++c) r(0, c) = -r(0, c);
        const double rotated = pfaffian(AntisymmetricMatrix(r * m.matrix() * r.transpose(), 1e-9));
        EXPECT_NEAR(rotated, determinant(r) * pfaffian(m), 1e-8 * std::max(1.0, std::abs(pfaffian(m))));
    }
}

TEST(Pfaffian, OddDimensionRejected) {
    RealMatrix m(3, 3);
    try {
        AntisymmetricMatrix a(m);
        FAIL() << "expected OddDimension";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddDimension);
    }
}

TEST(AntisymmetricMatrix, RejectsSymmetricPart) {
    RealMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    try {
        AntisymmetricMatrix a(m);
        FAIL() << "expected NotAntisymmetric";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAntisymmetric);
    }
}

TEST(AntisymmetricSingularValues, ZeroMatrix) {
    const auto l = antisymmetric_singular_values(AntisymmetricMatrix::zeros(4));
    ASSERT_EQ(l.size(), 2u);
    EXPECT_NEAR(l[0], 0.0, 1e-15);
    EXPECT_NEAR(l[1], 0.0, 1e-15);
}

TEST(AntisymmetricSingularValues, CanonicalBlocks) {
    const auto l = antisymmetric_singular_values(AntisymmetricMatrix(omega_blocks({0.3, 0.9})));
    EXPECT_NEAR(l[0], 0.9, 1e-14);
    EXPECT_NEAR(l[1], 0.3, 1e-14);
}

TEST(AntisymmetricSingularValues, SquaresMatchGramEigenvalues) {
    Rng rng = make_rng(5);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = 2 * (1 + t % 5);
        const auto m = random_antisymmetric(d, rng);
        const auto l = antisymmetric_singular_values(m);
        const auto g = hermitian_eig(m.matrix().transpose() * m.matrix()).values;  // ascending, paired
        for (std::size_t j = 0; j < d / 2; ++j) {
            EXPECT_NEAR(l[j] * l[j], g[d - 1 - 2 * j], 1e-10 * std::max(1.0, g.back()));
            EXPECT_NEAR(l[j] * l[j], g[d - 2 - 2 * j], 1e-10 * std::max(1.0, g.back()));
        }
    }
}

TEST(SingularValues, ProductInequalityOfLeadingProducts) {
    Rng rng = make_rng(6);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 1 + t % 8;
        const RealMatrix a = random_real_matrix(d, rng);
        const RealMatrix b = random_real_matrix(d, rng);
        const auto sa = singular_values(a);
        const auto sb = singular_values(b);
        const auto sab = singular_values(a * b);
        double pa = 1.0, pb = 1.0, pab = 1.0;
        for (std::size_t l = 0; l < d; ++l) {
            pa *= sa[l];
            pb *= sb[l];
            pab *= sab[l];
            if (l + 1 < d) {
                EXPECT_LE(pab, pa * pb * (1.0 + 1e-10));
            }
        }
        EXPECT_NEAR(pab, pa * pb, 1e-8 * std::max(1.0, pa * pb));
    }
}

TEST(Entropy, BinaryEntropyValues) {
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
    EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
    EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
    EXPECT_NEAR(binary_entropy(0.8), 0.72192809488736234787, 1e-15);
    EXPECT_THROW(binary_entropy(1.5), Error);
    EXPECT_THROW(binary_entropy(-0.1), Error);
}

TEST(Entropy, VonNeumannOfMaximallyMixed) {
    EXPECT_NEAR(von_neumann_entropy(ComplexMatrix::identity(8) * Complex{0.125}), 3.0, 1e-14);
}

}  // namespace
}  // namespace fermicap
