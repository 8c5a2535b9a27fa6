#pragma once

// Two arithmetic backends behind one field contract:
//   GaussianRational  exact elements of Q(i), big-rational parts
//   ComplexFloat      binary64 complex numbers that refuse to go non-finite
// Every formula in the library is a template over `Scalar` and runs in both.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>
#include <vector>

#include "toeplitz/error.hpp"

namespace toeplitz {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int re) : re_(re) {}  // NOLINT: literal convenience
    GaussianRational(long re) : re_(re) {}  // NOLINT
    explicit GaussianRational(mpq_class re, mpq_class im = 0);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    // re^2 + im^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator-(const GaussianRational& x) {
        return GaussianRational(-x.re_, -x.im_);
    }
    friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
    friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
    friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
    friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }
    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

class ComplexFloat {
public:
    ComplexFloat() = default;
    ComplexFloat(double re, double im = 0.0) : v_(re, im) { check(); }  // NOLINT
    ComplexFloat(std::complex<double> v) : v_(v) { check(); }           // NOLINT

    double re() const { return v_.real(); }
    double im() const { return v_.imag(); }
    std::complex<double> value() const { return v_; }

    bool is_zero() const { return v_ == std::complex<double>(0.0, 0.0); }

    ComplexFloat& operator+=(const ComplexFloat& o) { v_ += o.v_; check(); return *this; }
    ComplexFloat& operator-=(const ComplexFloat& o) { v_ -= o.v_; check(); return *this; }
    ComplexFloat& operator*=(const ComplexFloat& o) { v_ *= o.v_; check(); return *this; }
    ComplexFloat& operator/=(const ComplexFloat& o);

    friend ComplexFloat operator-(const ComplexFloat& x) { return ComplexFloat(-x.v_); }
    friend ComplexFloat operator+(ComplexFloat x, const ComplexFloat& y) { return x += y; }
    friend ComplexFloat operator-(ComplexFloat x, const ComplexFloat& y) { return x -= y; }
    friend ComplexFloat operator*(ComplexFloat x, const ComplexFloat& y) { return x *= y; }
    friend ComplexFloat operator/(ComplexFloat x, const ComplexFloat& y) { return x /= y; }
    friend bool operator==(const ComplexFloat& x, const ComplexFloat& y) { return x.v_ == y.v_; }

private:
    void check() const {
        if (!std::isfinite(v_.real()) || !std::isfinite(v_.imag()))
            throw NumericalError("floating overflow: non-finite complex value");
    }

    std::complex<double> v_{0.0, 0.0};
};

template <class T>
concept Scalar = std::same_as<T, GaussianRational> || std::same_as<T, ComplexFloat>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, GaussianRational>;

// Tolerances of the floating backend. The exact backend always tests for
// exact zero / exact equality instead.
inline constexpr double kPoleTolerance = 1e-13;      // |1 - ab| below this is a Z pole
inline constexpr double kDistinctTolerance = 1e-10;  // parameters closer than this coincide
inline constexpr double kRelativeFloor = 1e-14;      // absolute floor of relative comparisons

// ---- field operations shared by both backends ----------------------------

GaussianRational conj(const GaussianRational& x);
ComplexFloat conj(const ComplexFloat& x);

// x * conj(x); the imaginary part is exactly zero in both backends.
GaussianRational abs2(const GaussianRational& x);
ComplexFloat abs2(const ComplexFloat& x);

GaussianRational inv(const GaussianRational& x);
ComplexFloat inv(const ComplexFloat& x);

double modulus(const ComplexFloat& x);

std::complex<double> to_complex(const GaussianRational& x);
inline std::complex<double> to_complex(const ComplexFloat& x) { return x.value(); }

// Magnitude used for ordering and thresholds. Exact values are rounded;
// nothing exact ever depends on it.
template <Scalar T>
double approx_abs(const T& x) {
    return std::abs(to_complex(x));
}

template <Scalar T>
T from_exact(const GaussianRational& x) {
    if constexpr (is_exact_v<T>)
        return x;
    else
        return ComplexFloat(to_complex(x));
}

// Zero test: exact in Q(i), |x| < tol in floating point.
inline bool is_negligible(const GaussianRational& x, double /*tol*/) { return x.is_zero(); }
inline bool is_negligible(const ComplexFloat& x, double tol) { return std::abs(x.value()) < tol; }

template <Scalar T>
bool coincident(const T& x, const T& y) {
    return is_negligible(x - y, kDistinctTolerance);
}

// Integer power; negative exponents invert (zero base then throws).
template <Scalar T>
T ipow(T base, long exponent) {
    if (exponent < 0) {
        base = inv(base);
        exponent = -exponent;
    }
    T result(1);
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

template <Scalar T>
T product(const std::vector<T>& xs) {
    T p(1);
    for (const auto& x : xs) p *= x;
    return p;
}

// |x - y| / max(|y|, floor). Exact values are compared after rounding.
template <Scalar T>
double relative_error(const T& x, const T& y) {
    const auto a = to_complex(x);
    const auto b = to_complex(y);
    return std::abs(a - b) / std::max(std::abs(b), kRelativeFloor);
}

// ---- canonical text encoding ---------------------------------------------
//
// Grammar (whitespace ignored):
//   scalar   := real | imag | real sign imag_tail
//   real     := [sign] rational
//   imag     := [sign] (rational "i" | "i" ["/" digits] | "i")
//   rational := digits ["/" digits] | decimal
// Examples: "1/2", "-2", "i/2", "0+1/2i", "3/4-1/5i", "0.25", "-i".
GaussianRational parse_scalar(std::string_view text);

// Lowest-terms rendering that parse_scalar reads back exactly.
std::string to_string(const GaussianRational& x);
std::string to_string(const ComplexFloat& x);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);
std::ostream& operator<<(std::ostream& os, const ComplexFloat& x);

}  // namespace toeplitz
