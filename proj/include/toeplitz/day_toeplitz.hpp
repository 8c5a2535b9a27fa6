#pragma once

// Toeplitz determinants of rational symbols: the zero/pole-form sum over
// k-subsets of zeros, the parameter-form sum over (S, T), the Szego
// constants, and the Fredholm route through two Hankel operators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"
#include "toeplitz/th_formula.hpp"
#include "toeplitz/zfun.hpp"

namespace toeplitz {

template <Scalar T>
struct DayTermRecord {
    std::vector<std::size_t> M;  // positions of the zeros kept on the inner side
    T r_M{};                     // c0 * prod_{j not in M} r_j
    T A_M{};
};

template <Scalar T>
struct DayResult {
    T value{};
    std::vector<DayTermRecord<T>> terms;
};

// Smallest n for which the zero/pole-form sum equals D_n: h - (p - k),
// at least 1. Below it the matrix has too few rows for the outer poles.
template <Scalar T>
long day_min_n(const DayForm<T>& f) {
    const long p = static_cast<long>(f.r.size()), k = static_cast<long>(f.delta.size()),
               h = static_cast<long>(f.rho.size());
    return std::max(1L, h - (p - k));
}

// D_n = (-1)^{(p-k) n} sum_M A_M r_M^n over k-subsets M of the zeros, with
//   A_M = prod_{j notin M, alpha} (r_j - delta_alpha) prod_{beta, i in M} (rho_beta - r_i)
//       / (prod_{beta, alpha} (rho_beta - delta_alpha) prod_{j notin M, i in M} (r_j - r_i)).
// Zero when p < k.
template <Scalar T>
DayResult<T> day_det(const DayForm<T>& f, long n) {
    const auto rep = validate(f);
    if (!rep.ok()) throw ValidationError(rep.summary());
    if (n < day_min_n(f))
        throw ValidationError("n = " + std::to_string(n) + " is below the validity bound n >= " +
                              std::to_string(day_min_n(f)) + " (h - (p - k))");
    const std::size_t p = f.r.size(), k = f.delta.size();
    DayResult<T> out;
    out.value = T(0);
    if (p < k) return out;
    if (p > 30) throw UnsupportedError("too many zeros for subset enumeration");

    T pole_cross(1);
    for (const auto& rho : f.rho)
        for (const auto& delta : f.delta) pole_cross *= rho - delta;

    const std::uint64_t count = std::uint64_t{1} << p;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        const auto M = detail::mask_positions(mask);
        std::vector<bool> in_m(p, false);
        for (auto i : M) in_m[i] = true;
        T r_m = f.c0, num(1), den = pole_cross;
        for (std::size_t j = 0; j < p; ++j) {
            if (in_m[j]) {
                for (const auto& rho : f.rho) num *= rho - f.r[j];
                continue;
            }
            r_m *= f.r[j];
            for (const auto& delta : f.delta) num *= f.r[j] - delta;
            for (auto i : M) den *= f.r[j] - f.r[i];
        }
        if (is_negligible(den, kPoleTolerance)) throw SingularError("A_M is singular (repeated zeros)");
        const T a_m = num / den;
        out.value += a_m * ipow(r_m, n);
        out.terms.push_back({M, r_m, a_m});
    }
    if (((p - k) * static_cast<std::size_t>(n)) % 2) out.value = -out.value;
    return out;
}

// Smallest n for which the parameter-form sum equals D_n.
template <Scalar T>
long bc_toeplitz_min_n(const RationalSymbol<T>& s) {
    const long a = static_cast<long>(s.a.size()), b = static_cast<long>(s.b.size()),
               c = static_cast<long>(s.c.size()), d = static_cast<long>(s.d.size());
    return std::max({1L, c - a, d - b});
}

// D_n = sum_{S in A, T in B, |S| = |T|} S^n T^n Z(A - S + T^{-1}, B - T + S^{-1}; C, D)
template <Scalar T>
T bc_toeplitz_det(const RationalSymbol<T>& s, long n) {
    require_valid(s);
    if (n < bc_toeplitz_min_n(s))
        throw ValidationError("n = " + std::to_string(n) + " is below the validity bound n >= " +
                              std::to_string(bc_toeplitz_min_n(s)));
    if (s.a.size() > 30 || s.b.size() > 30) throw UnsupportedError("too many parameters for subset enumeration");
    const T cd = z_reciprocal(s.c, s.d);
    T total(0);
    const std::uint64_t a_count = std::uint64_t{1} << s.a.size();
    const std::uint64_t b_count = std::uint64_t{1} << s.b.size();
    for (std::uint64_t sm = 0; sm < a_count; ++sm) {
        const auto S = detail::mask_positions(sm);
        Multiset<T> s_vals;
        bool zero = false;
        for (auto i : S) {
            s_vals.push_back(s.a[i]);
            zero = zero || s.a[i].is_zero();
        }
        if (zero) continue;
        for (std::uint64_t tm = 0; tm < b_count; ++tm) {
            if (std::popcount(tm) != std::popcount(sm)) continue;
            const auto Tp = detail::mask_positions(tm);
            Multiset<T> t_vals;
            bool t_zero = false;
            for (auto i : Tp) {
                t_vals.push_back(s.b[i]);
                t_zero = t_zero || s.b[i].is_zero();
            }
            if (t_zero) continue;
            try {
                const auto a_new = surgery(s.a, S, t_vals);
                const auto b_new = surgery(s.b, Tp, s_vals);
                const T num = pow_prod(s_vals, n) * pow_prod(t_vals, n) * z_reciprocal(a_new, s.d) *
                              z_reciprocal(b_new, s.c);
                total += num / (z_reciprocal(a_new, b_new) * cd);
            } catch (const SingularError& e) {
                throw SingularError(std::string(e.what()) + " in term S=" + detail::index_list(S) +
                                    " T=" + detail::index_list(Tp));
            }
        }
    }
    return total;
}

namespace detail {

// The parameter form has winding number #{|b| > 1} - #{|a| > 1}; the Szego
// constants below are only given for the class with every zero inside.
template <Scalar T>
void require_inner_zeros(const RationalSymbol<T>& s) {
    require_valid(s);
    long winding = 0;
    bool outer = false;
    for (const auto& b : s.b) {
        if (!strictly_inside_circle(b)) outer = true;
        if (strictly_outside_circle(b)) ++winding;
    }
    for (const auto& a : s.a) {
        if (!strictly_inside_circle(a)) outer = true;
        if (strictly_outside_circle(a)) --winding;
    }
    if (winding != 0) throw ValidationError("nonzero winding number " + std::to_string(winding));
    if (outer) throw UnsupportedError("Szego constants need every a_i, b_i strictly inside the unit circle");
}

}  // namespace detail

// Geometric mean exp((log phi)_0); identically 1 in the parameter form.
template <Scalar T>
T szego_G(const RationalSymbol<T>& s) {
    detail::require_inner_zeros(s);
    return T(1);
}

// E(phi) = Z(A,B;C,D) for Toeplitz.
template <Scalar T>
T szego_E(const RationalSymbol<T>& s) {
    detail::require_inner_zeros(s);
    return z_composite(s.a, s.b, s.c, s.d);
}

struct SeriesValue {
    ComplexFloat value;
    double tail_bound = 0.0;  // bound on the neglected part of the exponent
    long terms = 0;
};

// exp(sum_{k=1}^{J} k (log phi)_k (log phi)_{-k})
SeriesValue szego_E_series(const RationalSymbol<ComplexFloat>& s, long J);

// exp(sum_{k odd} (log phi)_k - 1/2 sum k (log phi)_k^2 + sum k (log phi)_k (log phi)_{-k}),
// the Toeplitz-plus-Hankel constant, truncated at J.
SeriesValue szego_E_th_series(const RationalSymbol<ComplexFloat>& s, long J);

struct FredholmValue {
    ComplexFloat value;
    long truncation = 0;
};

// Truncation size for geometric decay at the given rate: entries beyond
// it fall below 1e-15. Throws NumericalError past 2048.
long adaptive_truncation(double max_modulus);

// G^n E det(I - H(z^{-n} u) H(v z^{-n})) with u = phi_- / phi_+ and
// v = tilde(phi_+) / tilde(phi_-), both Hankel operators cut to M x M.
// M = 0 picks the size from the parameter moduli.
FredholmValue bocg_det_toeplitz(const RationalSymbol<ComplexFloat>& s, long n, long M = 0);

}  // namespace toeplitz
