#pragma once

// Brute-force ground truth: dense T_n, H_n, T_n + H_n from Fourier
// coefficients, LU determinants in either backend, float eigenvalues.

#include <complex>
#include <ostream>
#include <utility>
#include <vector>

#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

template <Scalar T>
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// entry (i, j) = phi_{i-j}
template <Scalar T>
DenseMatrix<T> build_toeplitz(const FourierCoefficients<T>& phi, std::size_t n) {
    DenseMatrix<T> m(n, n);
    std::vector<T> cache;
    for (long j = -static_cast<long>(n) + 1; j < static_cast<long>(n); ++j) cache.push_back(phi(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cache[i - j + n - 1];
    return m;
}

// entry (i, j) = phi_{i+j+1}
template <Scalar T>
DenseMatrix<T> build_hankel(const FourierCoefficients<T>& phi, std::size_t n) {
    DenseMatrix<T> m(n, n);
    std::vector<T> cache;
    for (long j = 1; j < 2 * static_cast<long>(n); ++j) cache.push_back(phi(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cache[i + j];
    return m;
}

// entry (i, j) = phi_{i-j} + phi_{i+j+1}
template <Scalar T>
DenseMatrix<T> build_th(const FourierCoefficients<T>& phi, std::size_t n) {
    auto m = build_toeplitz(phi, n);
    const auto h = build_hankel(phi, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += h(i, j);
    return m;
}

template <Scalar T>
DenseMatrix<T> build_toeplitz(const RationalSymbol<T>& s, std::size_t n) {
    return build_toeplitz(FourierCoefficients<T>(s), n);
}
template <Scalar T>
DenseMatrix<T> build_hankel(const RationalSymbol<T>& s, std::size_t n) {
    return build_hankel(FourierCoefficients<T>(s), n);
}
template <Scalar T>
DenseMatrix<T> build_th(const RationalSymbol<T>& s, std::size_t n) {
    return build_th(FourierCoefficients<T>(s), n);
}

// Gaussian elimination with row swaps. Float pivots on the largest modulus,
// exact pivots on the first nonzero entry. A zero column gives det = 0.
template <Scalar T>
T det_lu(DenseMatrix<T> m) {
    if (m.rows() != m.cols()) throw ValidationError("det_lu: matrix is not square");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        if constexpr (is_exact_v<T>) {
            for (std::size_t r = col; r < n; ++r)
                if (!m(r, col).is_zero()) {
                    piv = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (std::size_t r = col; r < n; ++r) {
                const double v = modulus(m(r, col));
                if (v > best) {
                    best = v;
                    piv = r;
                }
            }
        }
        if (piv == n) return T(0);
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        const T p = m(col, col);
        det *= p;
        const T pinv = inv(p);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const T f = m(r, col) * pinv;
            for (std::size_t c = col + 1; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

struct EigenResult {
    std::vector<std::complex<double>> values;
    double max_residual = 0.0;  // max_i |(m - lambda_i) v_i| / |m|_F, unit v_i
};

// All eigenvalues of a dense complex matrix, with a residual certificate:
// throws NumericalError when the solver fails or any residual exceeds 1e-8.
EigenResult eigenvalues(const DenseMatrix<ComplexFloat>& m);

// Roots of sum_k coeffs[k] z^k via companion-matrix eigenvalues.
// coeffs must have a nonzero leading entry.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

// Row-major "re,im" pairs, one matrix row per line.
template <Scalar T>
void write_csv(std::ostream& os, const DenseMatrix<T>& m) {
    const auto old = os.precision(17);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto v = to_complex(m(i, j));
            if (j) os << ',';
            os << v.real() << ',' << v.imag();
        }
        os << '\n';
    }
    os.precision(old);
}

}  // namespace toeplitz
