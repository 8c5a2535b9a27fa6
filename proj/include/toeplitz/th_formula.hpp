#pragma once

// Closed forms for det(T_n(phi) + H_n(phi)) with
//     phi(z) = prod (1 - a/z)(1 - b z) / prod (1 - c/z)(1 - d z).
//
// General sum over S in E = A + D and T in B with |S| = |T|:
//     (-1)^|S| S^{n-1} T^n prod_D (1 + d) prod_S (1 - s) prod_{B-T} (1 - b)
//     * Z_S(D) Z(C,D) Z(E', B') / (Z(E', D) Z(B', C) Z_O(B'))
// where E' = E - S + T^{-1} and B' = B - T + S^{-1}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"
#include "toeplitz/zfun.hpp"

namespace toeplitz {

template <Scalar V>
struct SubsetTerm {
    std::vector<std::size_t> S;  // positions in E = A + D
    std::vector<std::size_t> T;  // positions in B
    int sign = 1;                // (-1)^|S|, already folded into value
    V value{};
};

template <Scalar T>
struct ThResult {
    T value{};
    std::vector<SubsetTerm<T>> terms;
    std::size_t skipped = 0;  // summands dropped because they would invert a zero parameter
};

// Exponents of the power products, kept adjustable so the alternatives can
// be compared against the matrix; the defaults are the ones that match it.
struct ThExponents {
    long s_offset = -1;  // S^{n + s_offset}
    long t_offset = 0;   // T^{n + t_offset}
};

// Szego-type constant of T + H: the n-independent (S = T = empty) summand,
// written out as a product.
template <Scalar T>
T e_th(const RationalSymbol<T>& s) {
    T num(1), den(1);
    for (const auto& b : s.b) num *= T(1) - b;
    for (const auto& d : s.d) num *= T(1) + d;
    num *= zo_reciprocal(s.b) * zo_reciprocal(s.d) * z_reciprocal(s.a, s.d) * z_reciprocal(s.b, s.c);
    den = z_reciprocal(s.b, s.d) * z_reciprocal(s.a, s.b) * z_reciprocal(s.c, s.d);
    return num / den;
}

namespace detail {

inline std::string index_list(const std::vector<std::size_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i] + 1);
    return out + "}";
}

inline std::vector<std::size_t> mask_positions(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1U) out.push_back(i);
    return out;
}

}  // namespace detail

// Smallest n for which the subset sum equals det(T_n + H_n). Equal sizes
// give 1; otherwise the bound was located against the matrix on all size
// profiles up to 3 and is tight except when B is empty.
template <Scalar T>
long th_det_min_n(const RationalSymbol<T>& s) {
    const long a = static_cast<long>(s.a.size()), b = static_cast<long>(s.b.size()),
               c = static_cast<long>(s.c.size()), d = static_cast<long>(s.d.size());
    return std::max({1L, b + c - a - d, d - b});
}

// Full subset sum. Terms whose S or T contains a zero parameter are skipped:
// their power factor vanishes for n >= 2 and the matrix agrees at n = 1 too.
// Masks run in increasing order, S outer and T inner, summed sequentially.
template <Scalar T>
ThResult<T> th_det(const RationalSymbol<T>& sym, long n, bool keep_terms = true, ThExponents ex = {}) {
    if (n < 1) throw ValidationError("n must be at least 1");
    require_valid(sym);
    if (n < th_det_min_n(sym))
        throw ValidationError("n = " + std::to_string(n) + " is below the validity bound n >= " +
                              std::to_string(th_det_min_n(sym)));
    const Multiset<T> E = concat(sym.a, sym.d);
    const Multiset<T>& B = sym.b;
    if (E.size() > 30 || B.size() > 30) throw UnsupportedError("too many parameters for subset enumeration");

    T fixed(1);
    for (const auto& d : sym.d) fixed *= T(1) + d;
    const T fixed_den = zs_reciprocal(sym.d) * z_reciprocal(sym.c, sym.d);

    ThResult<T> out;
    out.value = T(0);
    const std::uint64_t e_count = std::uint64_t{1} << E.size();
    const std::uint64_t b_count = std::uint64_t{1} << B.size();
    for (std::uint64_t sm = 0; sm < e_count; ++sm) {
        const auto S = detail::mask_positions(sm);
        bool s_zero = false;
        for (auto i : S) s_zero = s_zero || E[i].is_zero();
        for (std::uint64_t tm = 0; tm < b_count; ++tm) {
            if (std::popcount(tm) != std::popcount(sm)) continue;
            const auto Tp = detail::mask_positions(tm);
            bool t_zero = false;
            for (auto i : Tp) t_zero = t_zero || B[i].is_zero();
            if (s_zero || t_zero) {
                ++out.skipped;
                continue;
            }
            try {
                Multiset<T> s_vals, t_vals;
                for (auto i : S) s_vals.push_back(E[i]);
                for (auto i : Tp) t_vals.push_back(B[i]);
                const Multiset<T> e_new = surgery(E, S, t_vals);
                const Multiset<T> b_new = surgery(B, Tp, s_vals);

                T num = fixed * pow_prod(s_vals, n + ex.s_offset) * pow_prod(t_vals, n + ex.t_offset);
                for (const auto& s : s_vals) num *= T(1) - s;
                std::vector<bool> in_t(B.size(), false);
                for (auto i : Tp) in_t[i] = true;
                for (std::size_t i = 0; i < B.size(); ++i)
                    if (!in_t[i]) num *= T(1) - B[i];
                num *= z_reciprocal(e_new, sym.d) * z_reciprocal(b_new, sym.c) * zo_reciprocal(b_new);
                const T den = fixed_den * z_reciprocal(e_new, b_new);
                T value = num / den;
                const int sign = S.size() % 2 ? -1 : 1;
                if (sign < 0) value = -value;
                out.value += value;
                if (keep_terms) out.terms.push_back({S, Tp, sign, value});
            } catch (const SingularError& e) {
                throw SingularError(std::string(e.what()) + " in term S=" + detail::index_list(S) +
                                    " T=" + detail::index_list(Tp));
            }
        }
    }
    return out;
}

// Three-term closed form for a single parameter in each set.
template <Scalar T>
T th_det_k1(const T& a, const T& b, const T& c, const T& d, long n) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (coincident(a, d)) throw SingularError("th_det_k1: a = d makes the n-dependent terms singular");
    const T one(1);
    const T first = (one - b) * (one + d) * (one - c * b) * (one - a * d) /
                    ((one - b * d) * (one - a * b) * (one - c * d));
    const T second = ipow(b * d, n) * (one - a * d) * (b - d) * (d - c) / ((d - a) * (one - b * d) * (one - c * d));
    const T third = ipow(b * a, n) * (one - a) * (a - c) * (one + d) * (b - d) / ((a - d) * (one - a * b) * (one - c * d));
    return first + second + third;
}

template <Scalar T>
RationalSymbol<T> even_symbol(const Multiset<T>& A, const Multiset<T>& C) {
    return {A, A, C, C};
}

// Even symbols (B = A, D = C):
//     prod (1 + c)/(1 + a) * sum_{S in A} S^{2n + 1} Z_O(A - S + S^{-1}; C)
// exponent_offset moves the power to 2n + exponent_offset.
template <Scalar T>
T th_det_even(const Multiset<T>& A, const Multiset<T>& C, long n, long exponent_offset = 1) {
    if (n < 1) throw ValidationError("n must be at least 1");
    for (std::size_t i = 0; i < A.size(); ++i)
        if (coincident(A[i], T(-1))) throw SingularError("a_" + std::to_string(i + 1) + " = -1");
    for (std::size_t i = 0; i < C.size(); ++i)
        if (detail::outside_or_on_circle(C[i])) throw ValidationError("|c_" + std::to_string(i + 1) + "| ≥ 1");
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j)
            if (!A[i].is_zero() && coincident(A[i], A[j]))
                throw ValidationError("a_" + std::to_string(i + 1) + " and a_" + std::to_string(j + 1) + " coincide");
    if (A.size() > 30) throw UnsupportedError("too many parameters for subset enumeration");

    T pre(1);
    for (const auto& c : C) pre *= T(1) + c;
    for (const auto& a : A) pre /= T(1) + a;

    T sum(0);
    const std::uint64_t count = std::uint64_t{1} << A.size();
    for (std::uint64_t sm = 0; sm < count; ++sm) {
        const auto S = detail::mask_positions(sm);
        Multiset<T> s_vals;
        bool zero = false;
        for (auto i : S) {
            s_vals.push_back(A[i]);
            zero = zero || A[i].is_zero();
        }
        if (zero) continue;
        const auto a_new = surgery(A, S, s_vals);
        sum += pow_prod(s_vals, 2 * n + exponent_offset) * z_o_with(a_new, C);
    }
    return pre * sum;
}

}  // namespace toeplitz
