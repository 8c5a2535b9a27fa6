#pragma once

// Operator route for det(T_n + H_n): coefficients of
//     psi = phi_- phi_+^{-1} tilde(phi_+)^{-1},
// entries of K = H(psi)(T(psi^{-1}) - H(tilde(psi)^{-1})), and the
// truncated det(I + Q_n K Q_n). Parameter sets must have equal size k.

#include <optional>
#include <string>
#include <vector>

#include "toeplitz/matrix.hpp"
#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"
#include "toeplitz/th_formula.hpp"

namespace toeplitz {

template <Scalar T>
struct AlphaSet {
    std::vector<T> alpha_b, alpha_d_plus, alpha_d_minus, alpha_a;
};

namespace detail {

template <Scalar T>
void require_fredholm_profile(const RationalSymbol<T>& s) {
    if (!s.equal_sizes()) throw UnsupportedError("operator route needs |A| = |B| = |C| = |D|");
    require_valid(s);
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        if (s.a[i].is_zero()) throw ValidationError("operator route needs a_" + std::to_string(i + 1) + " ≠ 0");
        if (s.d[i].is_zero()) throw ValidationError("operator route needs d_" + std::to_string(i + 1) + " ≠ 0");
    }
}

template <Scalar T>
T checked_div(const T& num, const T& den, const char* what) {
    if (is_negligible(den, kPoleTolerance)) throw SingularError(std::string("vanishing denominator in ") + what);
    return num / den;
}

}  // namespace detail

template <Scalar T>
AlphaSet<T> alphas(const RationalSymbol<T>& s) {
    detail::require_fredholm_profile(s);
    const std::size_t k = s.a.size();
    const T one(1);
    AlphaSet<T> out;
    for (std::size_t j = 0; j < k; ++j) {
        const T& b = s.b[j];
        const T& d = s.d[j];
        const T& a = s.a[j];
        T nb(1), db(1), ndp(1), ddp(1), ndm(1), ddm(1), na(1), da(1);
        for (std::size_t i = 0; i < k; ++i) {
            nb *= (one - s.a[i] * b) * (one - s.d[i] * b) * (b - s.d[i]);
            db *= (one - s.c[i] * b) * (one - s.b[i] * b);
            ndp *= (one - s.c[i] * d) * (one - s.b[i] * d) * (d - s.b[i]);
            ddp *= (one - s.a[i] * d) * (one - s.d[i] * d);
            ndm *= (one - s.b[i] * d) * (d - s.c[i]) * (d - s.b[i]);
            ddm *= (d - s.a[i]) * (one - d * s.d[i]);
            na *= (one - a * s.b[i]) * (a - s.c[i]) * (a - s.b[i]);
            da *= (one - s.d[i] * a) * (a - s.d[i]);
            if (i != j) {
                db *= b - s.b[i];
                ddp *= d - s.d[i];
                ddm *= d - s.d[i];
                da *= a - s.a[i];
            }
        }
        out.alpha_b.push_back(detail::checked_div(nb, db, "alpha_b"));
        out.alpha_d_plus.push_back(detail::checked_div(ndp, ddp, "alpha_d+"));
        out.alpha_d_minus.push_back(detail::checked_div(ndm, ddm, "alpha_d-"));
        out.alpha_a.push_back(detail::checked_div(na, da, "alpha_a"));
    }
    return out;
}

enum class PsiKind { psi, psi_inverse, psi_tilde_inverse };

// Coefficients from the alpha series:
//   psi_j         = sum alpha_b b^{j-1}                            (j > 0 only)
//   psi^{-1}_j    = sum alpha_d+ d^{j-1}                           (j > 0)
//   psi^{-1}_{-j} = sum alpha_d- d^{j-1} + alpha_a a^{j-1}         (j > 0)
//   psi^{-1}_0    = sum alpha_d-/d + alpha_a/a + prod c b/(a d)
//   tilde(psi)^{-1}_j = psi^{-1}_{-j}
template <Scalar T>
T psi_fourier(const RationalSymbol<T>& s, const AlphaSet<T>& al, long j, PsiKind which) {
    const std::size_t k = s.a.size();
    if (which == PsiKind::psi_tilde_inverse) return psi_fourier(s, al, -j, PsiKind::psi_inverse);
    T acc(0);
    if (which == PsiKind::psi) {
        if (j <= 0) throw ValidationError("the alpha series gives psi_j only for j > 0");
        for (std::size_t i = 0; i < k; ++i) acc += al.alpha_b[i] * ipow(s.b[i], j - 1);
        return acc;
    }
    if (j > 0) {
        for (std::size_t i = 0; i < k; ++i) acc += al.alpha_d_plus[i] * ipow(s.d[i], j - 1);
    } else if (j < 0) {
        for (std::size_t i = 0; i < k; ++i)
            acc += al.alpha_d_minus[i] * ipow(s.d[i], -j - 1) + al.alpha_a[i] * ipow(s.a[i], -j - 1);
    } else {
        T tail(1);
        for (std::size_t i = 0; i < k; ++i) {
            acc += al.alpha_d_minus[i] / s.d[i] + al.alpha_a[i] / s.a[i];
            tail *= s.c[i] * s.b[i] / (s.a[i] * s.d[i]);
        }
        acc += tail;
    }
    return acc;
}

template <Scalar T>
T psi_fourier(const RationalSymbol<T>& s, long j, PsiKind which) {
    return psi_fourier(s, alphas(s), j, which);
}

// K(g, h) = sum_{i,j} alpha_b_i alpha_d-_j b_i^g d_j^h (1+b_i)(1-d_j) / ((d_j-b_i)(1-b_i d_j))
//         + sum_{i,j} alpha_b_i alpha_a_j  b_i^g a_j^h (1+b_i)(1-a_j) / ((a_j-b_i)(1-b_i a_j))
template <Scalar T>
T k_entry(const RationalSymbol<T>& s, const AlphaSet<T>& al, long g, long h) {
    const std::size_t k = s.a.size();
    const T one(1);
    T acc(0);
    for (std::size_t i = 0; i < k; ++i) {
        const T& b = s.b[i];
        const T lead = al.alpha_b[i] * ipow(b, g) * (one + b);
        for (std::size_t j = 0; j < k; ++j) {
            const T& d = s.d[j];
            const T& a = s.a[j];
            acc += lead * detail::checked_div(al.alpha_d_minus[j] * ipow(d, h) * (one - d), (d - b) * (one - b * d), "K entry");
            acc += lead * detail::checked_div(al.alpha_a[j] * ipow(a, h) * (one - a), (a - b) * (one - b * a), "K entry");
        }
    }
    return acc;
}

template <Scalar T>
T k_entry(const RationalSymbol<T>& s, long g, long h) {
    return k_entry(s, alphas(s), g, h);
}

// Defining series sum_{l=0}^{L} psi_{g+l+1} (psi^{-1}_{l-h} - psi^{-1}_{-l-h-1}).
template <Scalar T>
T k_entry_series(const RationalSymbol<T>& s, const AlphaSet<T>& al, long g, long h, long L) {
    T acc(0);
    for (long l = 0; l <= L; ++l)
        acc += psi_fourier(s, al, g + l + 1, PsiKind::psi) *
               (psi_fourier(s, al, l - h, PsiKind::psi_inverse) - psi_fourier(s, al, -l - h - 1, PsiKind::psi_inverse));
    return acc;
}

// Window (g, h) -> K(n + g, n + h), 0 <= g, h < M.
template <Scalar T>
DenseMatrix<T> k_window(const RationalSymbol<T>& s, const AlphaSet<T>& al, long n, long M) {
    DenseMatrix<T> w(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
    for (long g = 0; g < M; ++g)
        for (long h = 0; h < M; ++h) w(static_cast<std::size_t>(g), static_cast<std::size_t>(h)) = k_entry(s, al, n + g, n + h);
    return w;
}

struct BeResult {
    ComplexFloat value;
    long truncation = 0;
    // k = 1: H(psi) has rank one and det(I + Q_n K Q_n) = 1 + trace.
    std::optional<ComplexFloat> rank_one_value;
};

// E_th(phi) * det(I + K window) with the window size picked from the
// parameter moduli (M = 0) or given.
BeResult be_det(const RationalSymbol<ComplexFloat>& s, long n, long M = 0);

// sum_{g >= n} K(g, g) in closed form.
template <Scalar T>
T k_tail_trace(const RationalSymbol<T>& s, const AlphaSet<T>& al, long n) {
    const std::size_t k = s.a.size();
    const T one(1);
    T acc(0);
    for (std::size_t i = 0; i < k; ++i) {
        const T& b = s.b[i];
        for (std::size_t j = 0; j < k; ++j) {
            for (const T* x : {&s.d[j], &s.a[j]}) {
                const T& w = *x;
                const T& alpha = (x == &s.d[j]) ? al.alpha_d_minus[j] : al.alpha_a[j];
                const T q = b * w;
                acc += al.alpha_b[i] * alpha * (one + b) * (one - w) * ipow(q, n) /
                       ((w - b) * (one - q) * (one - q));
            }
        }
    }
    return acc;
}

// D_I({t}, {s}) = det(t_h^{i_g} s_h^{i_h}), rows g, columns h.
template <Scalar T>
T d_i_det(const std::vector<long>& I, const std::vector<T>& t, const std::vector<T>& s) {
    const std::size_t l = I.size();
    if (l == 0 || t.size() != l || s.size() != l) throw ValidationError("d_i_det: |I|, |T|, |S| must agree and be ≥ 1");
    DenseMatrix<T> m(l, l);
    for (std::size_t g = 0; g < l; ++g)
        for (std::size_t h = 0; h < l; ++h) m(g, h) = ipow(t[h], I[g]) * ipow(s[h], I[h]);
    return det_lu(m);
}

// sum over i_1..i_l >= n of D_I = prod (t s)^n * det(1 / (1 - t_h s_g)).
template <Scalar T>
T d_i_tail_sum(const std::vector<T>& t, const std::vector<T>& s, long n) {
    const std::size_t l = t.size();
    if (l == 0 || s.size() != l) throw ValidationError("d_i_tail_sum: |T| = |S| ≥ 1 required");
    DenseMatrix<T> m(l, l);
    T pre(1);
    for (std::size_t h = 0; h < l; ++h) {
        pre *= ipow(t[h] * s[h], n);
        for (std::size_t g = 0; g < l; ++g) m(g, h) = inv(detail::pole_factor(t[h], s[g]));
    }
    return pre * det_lu(m);
}

template <Scalar T>
struct CauchyPair {
    T direct{};
    T closed{};
};

// a_ij = 1 / ((s_i - t_j)(1 - s_i t_j)) against
// prod_{i<j} (t_i - t_j)(s_j - s_i)(1 - t_i t_j)(1 - s_i s_j) / prod_{i,j} (s_i - t_j)(1 - t_i s_j)
template <Scalar T>
CauchyPair<T> cauchy_type_det(const std::vector<T>& S, const std::vector<T>& Tv) {
    const std::size_t n = S.size();
    if (n == 0 || Tv.size() != n) throw ValidationError("cauchy_type_det: |S| = |T| ≥ 1 required");
    const T one(1);
    DenseMatrix<T> m(n, n);
    T num(1), den(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const T f = (S[i] - Tv[j]) * (one - S[i] * Tv[j]);
            if (is_negligible(f, kPoleTolerance)) throw SingularError("cauchy_type_det: singular entry");
            m(i, j) = inv(f);
            den *= (S[i] - Tv[j]) * (one - Tv[i] * S[j]);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            num *= (Tv[i] - Tv[j]) * (S[j] - S[i]) * (one - Tv[i] * Tv[j]) * (one - S[i] * S[j]);
    return {det_lu(m), num / den};
}

template <Scalar T>
struct ResidualValue {
    T value{};
    double scale = 0.0;  // largest summand modulus
};

// b_i sum_j ( -alpha_d-_j / (d_j (d_j - b_i)) - alpha_a_j / (a_j (a_j - b_i)) + alpha_d+_j / (1 - b_i d_j) )
//   + prod_j b_j c_j / (a_j d_j), which should vanish.
template <Scalar T>
ResidualValue<T> vanishing_residual(const RationalSymbol<T>& s, const AlphaSet<T>& al, std::size_t i) {
    const std::size_t k = s.a.size();
    if (i >= k) throw ValidationError("vanishing_residual: index out of range");
    const T one(1);
    const T& b = s.b[i];
    ResidualValue<T> out;
    out.value = T(0);
    auto add = [&](const T& x) {
        out.value += x;
        out.scale = std::max(out.scale, approx_abs(x));
    };
    for (std::size_t j = 0; j < k; ++j) {
        add(-b * detail::checked_div(al.alpha_d_minus[j], s.d[j] * (s.d[j] - b), "residual"));
        add(-b * detail::checked_div(al.alpha_a[j], s.a[j] * (s.a[j] - b), "residual"));
        add(b * detail::checked_div(al.alpha_d_plus[j], one - b * s.d[j], "residual"));
    }
    T tail(1);
    for (std::size_t j = 0; j < k; ++j) tail *= s.b[j] * s.c[j] / (s.a[j] * s.d[j]);
    add(tail);
    return out;
}

template <Scalar T>
ResidualValue<T> vanishing_residual(const RationalSymbol<T>& s, std::size_t i) {
    return vanishing_residual(s, alphas(s), i);
}

}  // namespace toeplitz
