#pragma once

// Rational symbols on the unit circle.
//
// Parameter form (sets A, B, C, D):
//     phi(z) = prod (1 - a/z)(1 - b z) / prod (1 - c/z)(1 - d z)
// Zero/pole form:
//     phi(z) = c0 prod (z - r_j) prod (1 - z/rho_j)^-1 prod (z - delta_j)^-1
// Both are special cases of LaurentSymbol, which is what the Fourier
// coefficient machinery works on.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "toeplitz/scalar.hpp"

namespace toeplitz {

template <Scalar T>
struct RationalSymbol {
    std::vector<T> a;  // zeros of the e^{-i theta} side
    std::vector<T> b;  // zeros of the e^{+i theta} side
    std::vector<T> c;  // poles of the e^{-i theta} side, |c| < 1
    std::vector<T> d;  // poles of the e^{+i theta} side, |d| < 1

    bool equal_sizes() const {
        return a.size() == b.size() && b.size() == c.size() && c.size() == d.size();
    }
    bool operator==(const RationalSymbol&) const = default;
};

template <Scalar T>
struct DayForm {
    T c0{1};
    std::vector<T> r;      // zeros, distinct
    std::vector<T> rho;    // poles outside the circle
    std::vector<T> delta;  // poles inside the circle
};

// scale * z^shift * prod(1 - mn/z) / prod(1 - md/z) * prod(1 - pn z) / prod(1 - pd z)
template <Scalar T>
struct LaurentSymbol {
    T scale{1};
    long shift = 0;
    std::vector<T> minus_num, minus_den, plus_num, plus_den;
};

template <Scalar T>
LaurentSymbol<T> to_laurent(const RationalSymbol<T>& s) {
    return {T(1), 0, s.a, s.c, s.b, s.d};
}

template <Scalar T>
LaurentSymbol<T> to_laurent(const DayForm<T>& f) {
    LaurentSymbol<T> out;
    out.scale = f.c0;
    out.shift = static_cast<long>(f.r.size()) - static_cast<long>(f.delta.size());
    out.minus_num = f.r;
    out.minus_den = f.delta;
    for (const auto& rho : f.rho) out.plus_den.push_back(inv(rho));
    return out;
}

template <Scalar T>
RationalSymbol<ComplexFloat> to_float(const RationalSymbol<T>& s) {
    auto conv = [](const std::vector<T>& xs) {
        std::vector<ComplexFloat> out;
        for (const auto& x : xs) out.emplace_back(to_complex(x));
        return out;
    };
    return {conv(s.a), conv(s.b), conv(s.c), conv(s.d)};
}

template <Scalar T>
DayForm<ComplexFloat> to_float(const DayForm<T>& f) {
    DayForm<ComplexFloat> out;
    out.c0 = ComplexFloat(to_complex(f.c0));
    for (const auto& x : f.r) out.r.emplace_back(to_complex(x));
    for (const auto& x : f.rho) out.rho.emplace_back(to_complex(x));
    for (const auto& x : f.delta) out.delta.emplace_back(to_complex(x));
    return out;
}

// ---- validation --------------------------------------------------------

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

namespace detail {

// |x| >= 1, decided exactly for Gaussian rationals.
template <Scalar T>
bool outside_or_on_circle(const T& x) {
    if constexpr (is_exact_v<T>)
        return x.norm() >= 1;
    else
        return modulus(x) >= 1.0;
}

template <Scalar T>
bool strictly_inside_circle(const T& x) {
    return !outside_or_on_circle(x);
}

template <Scalar T>
bool strictly_outside_circle(const T& x) {
    if constexpr (is_exact_v<T>)
        return x.norm() > 1;
    else
        return modulus(x) > 1.0;
}

}  // namespace detail

// Checks |c_i| < 1, |d_i| < 1 and pairwise distinctness of the nonzero
// a, b, d parameters. Zero parameters never count as coincident: the
// closed forms drop every summand that would invert them.
template <Scalar T>
ValidationReport validate(const RationalSymbol<T>& s) {
    ValidationReport rep;
    auto idx = [](char set, std::size_t i) { return std::string(1, set) + "_" + std::to_string(i + 1); };
    for (std::size_t i = 0; i < s.c.size(); ++i)
        if (detail::outside_or_on_circle(s.c[i])) rep.issues.push_back("|" + idx('c', i) + "| ≥ 1");
    for (std::size_t i = 0; i < s.d.size(); ++i)
        if (detail::outside_or_on_circle(s.d[i])) rep.issues.push_back("|" + idx('d', i) + "| ≥ 1");

    struct Tagged {
        std::string name;
        const T* value;
    };
    std::vector<Tagged> pool;
    for (std::size_t i = 0; i < s.a.size(); ++i) pool.push_back({idx('a', i), &s.a[i]});
    for (std::size_t i = 0; i < s.b.size(); ++i) pool.push_back({idx('b', i), &s.b[i]});
    for (std::size_t i = 0; i < s.d.size(); ++i) pool.push_back({idx('d', i), &s.d[i]});
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].value->is_zero()) continue;
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (pool[j].value->is_zero()) continue;
            if (coincident(*pool[i].value, *pool[j].value))
                rep.issues.push_back(pool[i].name + " and " + pool[j].name + " coincide");
        }
    }
    return rep;
}

template <Scalar T>
void require_valid(const RationalSymbol<T>& s) {
    const auto rep = validate(s);
    if (!rep.ok()) throw ValidationError(rep.summary());
}

template <Scalar T>
ValidationReport validate(const DayForm<T>& f) {
    ValidationReport rep;
    if (f.c0.is_zero()) rep.issues.push_back("c0 = 0");
    for (std::size_t i = 0; i < f.rho.size(); ++i)
        if (!detail::strictly_outside_circle(f.rho[i]))
            rep.issues.push_back("|rho_" + std::to_string(i + 1) + "| ≤ 1");
    for (std::size_t i = 0; i < f.delta.size(); ++i)
        if (detail::outside_or_on_circle(f.delta[i]))
            rep.issues.push_back("|delta_" + std::to_string(i + 1) + "| ≥ 1");
    for (std::size_t i = 0; i < f.r.size(); ++i)
        for (std::size_t j = i + 1; j < f.r.size(); ++j)
            if (coincident(f.r[i], f.r[j]))
                rep.issues.push_back("r_" + std::to_string(i + 1) + " and r_" + std::to_string(j + 1) +
                                     " coincide (multiple zero)");
    return rep;
}

// Moves a, b, d apart deterministically: the m-th parameter in the
// concatenation A, B, D gets eps * m added (m counted from 1).
template <Scalar T>
RationalSymbol<T> perturb(RationalSymbol<T> s, const T& eps) {
    long m = 1;
    for (auto& x : s.a) x += eps * T(m++);
    for (auto& x : s.b) x += eps * T(m++);
    for (auto& x : s.d) x += eps * T(m++);
    return s;
}

// ---- evaluation ----------------------------------------------------------

template <Scalar T>
T evaluate(const LaurentSymbol<T>& s, const T& z) {
    if (z.is_zero()) throw SingularError("symbol evaluated at z = 0");
    const T zi = inv(z);
    T num = s.scale * ipow(z, s.shift);
    T den(1);
    for (const auto& x : s.minus_num) num *= T(1) - x * zi;
    for (const auto& x : s.plus_num) num *= T(1) - x * z;
    for (const auto& x : s.minus_den) den *= T(1) - x * zi;
    for (const auto& x : s.plus_den) den *= T(1) - x * z;
    if (is_negligible(den, kPoleTolerance)) throw SingularError("pole of the symbol at z = " + to_string(z));
    return num / den;
}

template <Scalar T>
T evaluate(const RationalSymbol<T>& s, const T& z) {
    return evaluate(to_laurent(s), z);
}

template <Scalar T>
T evaluate(const DayForm<T>& f, const T& z) {
    return evaluate(to_laurent(f), z);
}

// ---- Fourier coefficients ------------------------------------------------
//
// The coefficient of x^m in prod(1 - n_i x) / prod(1 - p_l x) with distinct
// nonzero p_l is poly_m + sum_l w_l p_l^m, where the polynomial part has
// degree #n - #p and w_l is the partial-fraction weight of p_l. Nothing here
// assumes |n_i| < 1, so zeros outside the circle need no continuation.
template <Scalar T>
class OneSidedSeries {
public:
    OneSidedSeries(const std::vector<T>& num, const std::vector<T>& den) {
        std::vector<T> n;
        for (const auto& x : num)
            if (!x.is_zero()) n.push_back(x);
        for (const auto& x : den)
            if (!x.is_zero()) poles_.push_back(x);
        for (std::size_t i = 0; i < poles_.size(); ++i)
            for (std::size_t j = i + 1; j < poles_.size(); ++j)
                if (coincident(poles_[i], poles_[j]))
                    throw UnsupportedError("coincident poles " + to_string(poles_[i]) + " and " +
                                           to_string(poles_[j]) + " (multiple poles are not supported)");
        for (std::size_t l = 0; l < poles_.size(); ++l) {
            const T pinv = inv(poles_[l]);
            T w(1);
            for (const auto& x : n) w *= T(1) - x * pinv;
            for (std::size_t m = 0; m < poles_.size(); ++m)
                if (m != l) w /= T(1) - poles_[m] * pinv;
            weights_.push_back(w);
        }
        const long deg = static_cast<long>(n.size()) - static_cast<long>(poles_.size());
        if (deg >= 0) {
            // first deg+1 coefficients of the full series by direct recurrence
            std::vector<T> s(static_cast<std::size_t>(deg) + 1, T(0));
            s[0] = T(1);
            for (const auto& x : n)
                for (std::size_t m = s.size() - 1; m >= 1; --m) s[m] -= x * s[m - 1];
            for (const auto& p : poles_)
                for (std::size_t m = 1; m < s.size(); ++m) s[m] += p * s[m - 1];
            for (std::size_t m = 0; m < s.size(); ++m) poly_.push_back(s[m] - geometric(static_cast<long>(m)));
        }
    }

    const std::vector<T>& poles() const { return poles_; }
    const std::vector<T>& weights() const { return weights_; }
    const std::vector<T>& poly() const { return poly_; }

    // sum_l w_l p_l^m
    T geometric(long m) const {
        T acc(0);
        for (std::size_t l = 0; l < poles_.size(); ++l) acc += weights_[l] * ipow(poles_[l], m);
        return acc;
    }

    // coefficient of x^m, m >= 0
    T at(long m) const {
        T v = geometric(m);
        if (m < static_cast<long>(poly_.size())) v += poly_[static_cast<std::size_t>(m)];
        return v;
    }

private:
    std::vector<T> poles_, weights_, poly_;
};

namespace detail {

// sum_{m >= 0} P_{m+j} Q_m for j >= 0, in closed form.
template <Scalar T>
T cross_sum(const OneSidedSeries<T>& P, const OneSidedSeries<T>& Q, long j) {
    T total(0);
    const long qp = static_cast<long>(Q.poly().size());
    for (long m = 0; m < qp; ++m) total += P.at(m + j) * Q.poly()[static_cast<std::size_t>(m)];
    const long pp = static_cast<long>(P.poly().size());
    for (long m = 0; m + j < pp; ++m) total += P.poly()[static_cast<std::size_t>(m + j)] * Q.geometric(m);
    for (std::size_t i = 0; i < P.poles().size(); ++i) {
        const T head = P.weights()[i] * ipow(P.poles()[i], j);
        for (std::size_t l = 0; l < Q.poles().size(); ++l) {
            const T den = T(1) - P.poles()[i] * Q.poles()[l];
            if (is_negligible(den, kPoleTolerance))
                throw SingularError("pole pair on the unit circle in Fourier expansion");
            total += head * Q.weights()[l] / den;
        }
    }
    return total;
}

}  // namespace detail

// Fourier coefficients of one symbol; the two one-sided expansions are
// built once and reused for every index.
template <Scalar T>
class FourierCoefficients {
public:
    explicit FourierCoefficients(const LaurentSymbol<T>& s)
        : scale_(s.scale), shift_(s.shift), plus_(s.plus_num, s.plus_den), minus_(s.minus_num, s.minus_den) {
        for (const auto& p : s.plus_den)
            if (!detail::strictly_inside_circle(p))
                throw ValidationError("pole parameter " + to_string(p) + " of the e^{+i theta} side has modulus ≥ 1");
        for (const auto& p : s.minus_den)
            if (!detail::strictly_inside_circle(p))
                throw ValidationError("pole parameter " + to_string(p) + " of the e^{-i theta} side has modulus ≥ 1");
    }
    explicit FourierCoefficients(const RationalSymbol<T>& s) : FourierCoefficients(to_laurent(s)) {}

    T operator()(long j) const {
        const long m = j - shift_;
        return scale_ * (m >= 0 ? detail::cross_sum(plus_, minus_, m) : detail::cross_sum(minus_, plus_, -m));
    }

private:
    T scale_;
    long shift_;
    OneSidedSeries<T> plus_, minus_;
};

template <Scalar T>
T fourier_coeff(const RationalSymbol<T>& s, long j) {
    return FourierCoefficients<T>(s)(j);
}

template <Scalar T>
T fourier_coeff(const LaurentSymbol<T>& s, long j) {
    return FourierCoefficients<T>(s)(j);
}

// ---- conversions and factorizations --------------------------------------

template <Scalar T>
struct BCConversion {
    RationalSymbol<T> symbol;
    T prefactor_base;  // D_n(day) = prefactor_base^n * D_n(symbol)

    T prefactor(long n) const { return ipow(prefactor_base, n); }
};

// Factor z out k times so the k smallest zeros (by modulus, ties in input
// order) land on the e^{-i theta} side and the rest are inverted.
template <Scalar T>
BCConversion<T> day_to_bc(const DayForm<T>& f) {
    const std::size_t p = f.r.size(), k = f.delta.size();
    if (p < k) throw ValidationError("p<k, determinant vanishes (no parameter form exists)");
    if (f.c0.is_zero()) throw ValidationError("c0 = 0");
    std::vector<std::size_t> order(p);
    for (std::size_t i = 0; i < p; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return approx_abs(f.r[x]) < approx_abs(f.r[y]); });
    BCConversion<T> out{{}, f.c0};
    for (std::size_t i = 0; i < p; ++i) {
        const T& r = f.r[order[i]];
        if (i < k) {
            out.symbol.a.push_back(r);
        } else {
            if (r.is_zero()) throw ValidationError("zero r_" + std::to_string(order[i] + 1) + " cannot be inverted");
            out.symbol.b.push_back(inv(r));
            out.prefactor_base *= -r;
        }
    }
    out.symbol.c = f.delta;
    for (const auto& rho : f.rho) {
        if (rho.is_zero()) throw ValidationError("rho = 0");
        out.symbol.d.push_back(inv(rho));
    }
    return out;
}

template <Scalar T>
struct WHFactors {
    RationalSymbol<T> plus;   // carries B, D: analytic inside the circle
    RationalSymbol<T> minus;  // carries A, C: analytic outside
};

template <Scalar T>
WHFactors<T> wiener_hopf(const RationalSymbol<T>& s) {
    return {{{}, s.b, {}, s.d}, {s.a, {}, s.c, {}}};
}

// psi = phi_- phi_+^{-1} tilde(phi_+)^{-1} as a parameter-form symbol:
// zeros A+D (minus side), D (plus side); poles C+B (minus), B (plus).
template <Scalar T>
RationalSymbol<T> psi_of(const RationalSymbol<T>& s) {
    RationalSymbol<T> out;
    out.a = s.a;
    out.a.insert(out.a.end(), s.d.begin(), s.d.end());
    out.b = s.d;
    out.c = s.c;
    out.c.insert(out.c.end(), s.b.begin(), s.b.end());
    out.d = s.b;
    return out;
}

// Reciprocal 1/psi in the same form.
template <Scalar T>
RationalSymbol<T> psi_inverse_of(const RationalSymbol<T>& s) {
    const auto p = psi_of(s);
    return {p.c, p.d, p.a, p.b};
}

// Argument principle on m equispaced circle points.
int winding_number(const LaurentSymbol<ComplexFloat>& s, int m = 1024);

template <Scalar T>
int winding_number(const RationalSymbol<T>& s, int m = 1024) {
    return winding_number(to_laurent(to_float(s)), m);
}

// (log phi)_j for a parameter-form symbol with every parameter inside the circle.
ComplexFloat log_coefficient(const RationalSymbol<ComplexFloat>& s, long j);

}  // namespace toeplitz
