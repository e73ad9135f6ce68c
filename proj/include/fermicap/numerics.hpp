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
 * @brief Dense linear algebra kernels: a small square/rectangular matrix type,
 * Jacobi eigensolver for Hermitian matrices, PSD matrix logarithm, Pfaffian
 * (Parlett-Reid) and spectral data of real antisymmetric matrices.
 *
 * Dimensions in this project never exceed 2^5, so everything is O(d^3) and
 * allocation-happy on purpose.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fermicap/error.hpp"

namespace fermicap {

using Complex = std::complex<double>;

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename T>
T conj_value(const T& v) {
    if constexpr (is_complex<T>::value) {
        return std::conj(v);
    } else {
        return v;
    }
}

template <typename T>
double real_part(const T& v) {
    if constexpr (is_complex<T>::value) {
        return v.real();
    } else {
        return v;
    }
}

}  // namespace detail

/// Row-major dense matrix with value semantics.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static Matrix zeros(std::size_t n) { return Matrix(n, n); }

    static Matrix diagonal(std::span<const double> diag) {
        Matrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = T{diag[i]};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> data() noexcept { return data_; }
    std::span<const T> data() const noexcept { return data_; }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = detail::conj_value((*this)(r, c));
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(T s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, T s) { return a *= s; }
    friend Matrix operator*(T s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_same_shape(const Matrix& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch,
                "matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;
using ComplexVector = std::vector<Complex>;

template <typename T>
T trace(const Matrix<T>& a) {
    T t{};
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

template <typename T>
double max_abs(const Matrix<T>& a) {
    double m = 0.0;
    for (const auto& v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
            "matrix shapes differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

template <typename T>
double frobenius_norm(const Matrix<T>& a) {
    double s = 0.0;
    for (const auto& v : a.data()) s += std::norm(v);
    return std::sqrt(s);
}

/// max |A - A^dagger|.
template <typename T>
double hermiticity_defect(const Matrix<T>& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "hermiticity check needs a square matrix");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - detail::conj_value(a(j, i))));
    return m;
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline ComplexMatrix to_complex(const RealMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = a.data()[i];
    return out;
}

/// |psi><psi|
inline ComplexMatrix outer_projector(std::span<const Complex> psi) {
    ComplexMatrix out(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j) out(i, j) = psi[i] * std::conj(psi[j]);
    return out;
}

inline double vector_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver
// ---------------------------------------------------------------------------

template <typename T>
struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix<T> vectors;           // column j pairs with values[j]
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;

/**
 * Cyclic Jacobi eigensolver for Hermitian (or real symmetric) matrices.
 *
 * Each rotation first strips the phase of a_pq with a diagonal unitary and
 * then applies the classical real Jacobi rotation. Off-diagonal entries that
 * no longer affect the diagonal in double precision are zeroed; the sweep loop
 * ends when none remain.
 */
template <typename T>
EigenDecomposition<T> hermitian_eig(const Matrix<T>& input, double tol = kHermitianTol) {
    require(input.is_square(), ErrorKind::DimensionMismatch, "eigensolver needs a square matrix");
    const std::size_t d = input.rows();
    const double scale = std::max(1.0, max_abs(input));
    const double defect = hermiticity_defect(input);
    if (defect > tol * scale)
        throw Error(ErrorKind::NotHermitian, "|A - A^dagger|_max = " + std::to_string(defect));

    Matrix<T> a(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        a(i, i) = T{detail::real_part(input(i, i))};
        for (std::size_t j = i + 1; j < d; ++j) {
            const T v = (input(i, j) + detail::conj_value(input(j, i))) * T{0.5};
            a(i, j) = v;
            a(j, i) = detail::conj_value(v);
        }
    }
    Matrix<T> v = Matrix<T>::identity(d);

    bool converged = d <= 1;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const T apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = detail::real_part(a(p, p));
                const double aqq = detail::real_part(a(q, q));
                const double g = 100.0 * mag;
                if (std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    a(p, q) = T{};
                    a(q, p) = T{};
                    continue;
                }
                rotated = true;
                const T ph = apq / T{mag};
                const T phc = detail::conj_value(ph);
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- A G, V <- V G with G = diag(1, conj(ph)) * [[c, s], [-s, c]].
                for (std::size_t k = 0; k < d; ++k) {
                    const T akp = a(k, p);
                    const T akq = a(k, q);
                    a(k, p) = c * akp - s * phc * akq;
                    a(k, q) = s * akp + c * phc * akq;
                    const T vkp = v(k, p);
                    const T vkq = v(k, q);
                    v(k, p) = c * vkp - s * phc * vkq;
                    v(k, q) = s * vkp + c * phc * vkq;
                }
                // A <- G^dagger A
                for (std::size_t k = 0; k < d; ++k) {
                    const T apk = a(p, k);
                    const T aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * apk + c * ph * aqk;
                }
                a(p, q) = T{};
                a(q, p) = T{};
                a(p, p) = T{detail::real_part(a(p, p))};
                a(q, q) = T{detail::real_part(a(q, q))};
            }
        }
        converged = !rotated;
    }
    if (!converged)
        throw Error(ErrorKind::NoConvergence,
                    "Jacobi eigensolver exceeded " + std::to_string(kMaxJacobiSweeps) + " sweeps");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return detail::real_part(a(x, x)) < detail::real_part(a(y, y));
    });
    EigenDecomposition<T> out{std::vector<double>(d), Matrix<T>(d, d)};
    for (std::size_t j = 0; j < d; ++j) {
        out.values[j] = detail::real_part(a(order[j], order[j]));
        for (std::size_t k = 0; k < d; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

/// V f(Lambda) V^dagger
template <typename T, typename F>
Matrix<T> spectral_apply(const EigenDecomposition<T>& eig, F&& f) {
    const std::size_t d = eig.values.size();
    Matrix<T> out(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const double fj = f(eig.values[j]);
        if (fj == 0.0) continue;
        for (std::size_t r = 0; r < d; ++r) {
            const T vr = eig.vectors(r, j) * T{fj};
            for (std::size_t c = 0; c < d; ++c)
                out(r, c) += vr * detail::conj_value(eig.vectors(c, j));
        }
    }
    return out;
}

inline constexpr double kDefaultLogFloor = 1e-300;
inline constexpr double kPsdTol = 1e-10;

/// Natural logarithm of a PSD matrix from its eigendecomposition, with
/// eigenvalues clamped from below by `floor`.
template <typename T>
Matrix<T> matrix_log_psd(const EigenDecomposition<T>& eig, double floor = kDefaultLogFloor) {
    require(floor > 0.0, ErrorKind::InvalidConfig, "log floor must be positive");
    for (double lam : eig.values)
        if (lam < -kPsdTol)
            throw Error(ErrorKind::NotPSD, "eigenvalue " + std::to_string(lam) + " below zero");
    return spectral_apply(eig, [floor](double lam) { return std::log(std::max(lam, floor)); });
}

template <typename T>
Matrix<T> matrix_log_psd(const Matrix<T>& a, double floor = kDefaultLogFloor) {
    return matrix_log_psd(hermitian_eig(a), floor);
}

/// -sum p log2 p over the positive part of a spectrum.
inline double entropy_bits(std::span<const double> spectrum) {
    double s = 0.0;
    for (double p : spectrum)
        if (p > 0.0) s -= p * std::log2(p);
    return s;
}

/// Shannon binary entropy in bits, H(0) = H(1) = 0.
inline double binary_entropy(double x) {
    require(x >= 0.0 && x <= 1.0, ErrorKind::OutOfRange,
            "binary entropy argument " + std::to_string(x) + " outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Von Neumann entropy in bits.
inline double von_neumann_entropy(const ComplexMatrix& rho) {
    const auto eig = hermitian_eig(rho);
    return entropy_bits(eig.values);
}

// ---------------------------------------------------------------------------
// Antisymmetric matrices and the Pfaffian
// ---------------------------------------------------------------------------

inline constexpr double kAntisymmetryTol = 1e-12;

/// Real antisymmetric matrix of even dimension. Antisymmetry is checked on
/// ingest and then enforced exactly from the strict upper triangle.
class AntisymmetricMatrix {
public:
    AntisymmetricMatrix() = default;

    explicit AntisymmetricMatrix(const RealMatrix& m, double tol = kAntisymmetryTol) : m_(m) {
        require(m.is_square(), ErrorKind::DimensionMismatch, "antisymmetric matrix must be square");
        require(m.rows() % 2 == 0, ErrorKind::OddDimension,
                "antisymmetric matrix must have even dimension, got " + std::to_string(m.rows()));
        const double scale = std::max(1.0, max_abs(m));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            require(std::abs(m(i, i)) <= tol * scale, ErrorKind::NotAntisymmetric,
                    "non-zero diagonal entry");
            for (std::size_t j = i + 1; j < m.cols(); ++j) {
                require(std::abs(m(i, j) + m(j, i)) <= tol * scale, ErrorKind::NotAntisymmetric,
                        "entries (" + std::to_string(i) + "," + std::to_string(j) +
                            ") break antisymmetry");
                m_(j, i) = -m_(i, j);
            }
            m_(i, i) = 0.0;
        }
    }

    static AntisymmetricMatrix zeros(std::size_t dim) { return AntisymmetricMatrix(RealMatrix(dim, dim)); }

    std::size_t dim() const noexcept { return m_.rows(); }
    std::size_t modes() const noexcept { return m_.rows() / 2; }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const RealMatrix& matrix() const noexcept { return m_; }

    /// Principal submatrix on the given indices.
    AntisymmetricMatrix submatrix(std::span<const std::size_t> indices) const {
        RealMatrix s(indices.size(), indices.size());
        for (std::size_t a = 0; a < indices.size(); ++a)
            for (std::size_t b = 0; b < indices.size(); ++b) s(a, b) = m_(indices[a], indices[b]);
        return AntisymmetricMatrix(s);
    }

private:
    RealMatrix m_;
};

/**
 * Pfaffian by Parlett-Reid tridiagonalization with partial pivoting.
 * Works in place on a scratch copy; odd dimension yields 0 here, the checked
 * overload below rejects it.
 */
template <typename T>
T pfaffian_in_place(Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n == 0) return T{1};
    if (n % 2 == 1) return T{0};

    T result{1};
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t kp = k + 1;
        for (std::size_t i = k + 2; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(kp, k))) kp = i;

        if (kp != k + 1) {
            for (std::size_t i = 0; i < n; ++i) std::swap(a(k + 1, i), a(kp, i));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, kp));
            result = -result;
        }

        const T pivot = a(k, k + 1);
        if (pivot == T{}) return T{0};
        result *= pivot;

        if (k + 2 < n) {
            std::vector<T> tau(n - k - 2);
            for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = a(k, k + 2 + i) / pivot;
            for (std::size_t i = k + 2; i < n; ++i)
                for (std::size_t j = k + 2; j < n; ++j)
                    a(i, j) += tau[i - k - 2] * a(j, k + 1) - tau[j - k - 2] * a(i, k + 1);
        }
    }
    return result;
}

inline double pfaffian(const AntisymmetricMatrix& m) {
    RealMatrix scratch = m.matrix();
    return pfaffian_in_place(scratch);
}

/// Pfaffian of a raw matrix; rejects odd dimensions and non-antisymmetric input.
inline double pfaffian(const RealMatrix& m) { return pfaffian(AntisymmetricMatrix(m)); }

inline std::vector<double> singular_values(const RealMatrix& a);

/**
 * The values lambda_1 >= ... >= lambda_n >= 0 such that the spectrum of the
 * 2n x 2n antisymmetric M is {+-i lambda_j}. Each lambda_j is a singular value
 * of M of even multiplicity; the real one-sided Jacobi SVD keeps entries of
 * signed-permutation-like inputs exact, which matters near lambda = 1 where
 * H((1 + lambda) / 2) has unbounded slope.
 */
inline std::vector<double> antisymmetric_singular_values(const AntisymmetricMatrix& m) {
    const auto s = singular_values(m.matrix());
    std::vector<double> lambdas(m.dim() / 2);
    for (std::size_t j = 0; j < lambdas.size(); ++j) lambdas[j] = 0.5 * (s[2 * j] + s[2 * j + 1]);
    return lambdas;
}

/**
 * Singular values of a real square matrix, descending. One-sided Jacobi
 * orthogonalizes column pairs until all are mutually orthogonal; the column
 * norms are then the singular values, with small ones accurate to high
 * relative precision.
 */
inline std::vector<double> singular_values(const RealMatrix& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "singular values need a square matrix");
    RealMatrix u = a;
    const std::size_t n = u.cols();
    bool rotated = true;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && rotated; ++sweep) {
        rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    alpha += u(i, p) * u(i, p);
                    beta += u(i, q) * u(i, q);
                    gamma += u(i, p) * u(i, q);
                }
                if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = c * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const double up = u(i, p);
                    const double uq = u(i, q);
                    u(i, p) = c * up - sn * uq;
                    u(i, q) = sn * up + c * uq;
                }
            }
    }
    if (rotated) throw Error(ErrorKind::NoConvergence, "one-sided Jacobi did not converge");
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm2 += u(i, j) * u(i, j);
        s[j] = std::sqrt(norm2);
    }
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

/// Determinant by LU with partial pivoting.
template <typename T>
T determinant(Matrix<T> a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "determinant needs a square matrix");
    const std::size_t n = a.rows();
    T det{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == T{}) return T{0};
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

/// max |R R^T - I|
inline double orthogonality_defect(const RealMatrix& r) {
    return max_abs_diff(r * r.transpose(), RealMatrix::identity(r.rows()));
}

}  // namespace fermicap
