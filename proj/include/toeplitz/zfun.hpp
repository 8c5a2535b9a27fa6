#pragma once

// Products over parameter multisets:
//   Z(A,B)   = prod_{a,b} (1 - ab)^-1
//   Z_S(A)   = prod_{i <= j} (1 - a_i a_j)^-1
//   Z_O(A)   = prod_{i <  j} (1 - a_i a_j)^-1
//   Z_O(A;C) = Z_O(A) Z_S(C) / Z(A,C)
// Multisets are plain vectors; duplicates are kept by position.

#include <string>
#include <vector>

#include "toeplitz/scalar.hpp"

namespace toeplitz {

template <Scalar T>
using Multiset = std::vector<T>;

namespace detail {

template <Scalar T>
T pole_factor(const T& x, const T& y) {
    T f = T(1) - x * y;
    if (is_negligible(f, kPoleTolerance))
        throw SingularError("Z pole: 1 - xy = 0 for x = " + to_string(x) + ", y = " + to_string(y));
    return f;
}

}  // namespace detail

// 1/Z(A,B), i.e. the plain product of (1 - ab); pole-checked.
template <Scalar T>
T z_reciprocal(const Multiset<T>& A, const Multiset<T>& B) {
    T p(1);
    for (const auto& x : A)
        for (const auto& y : B) p *= detail::pole_factor(x, y);
    return p;
}

template <Scalar T>
T zo_reciprocal(const Multiset<T>& A) {
    T p(1);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j) p *= detail::pole_factor(A[i], A[j]);
    return p;
}

template <Scalar T>
T zs_reciprocal(const Multiset<T>& A) {
    T p = zo_reciprocal(A);
    for (const auto& x : A) p *= detail::pole_factor(x, x);
    return p;
}

template <Scalar T>
T z(const Multiset<T>& A, const Multiset<T>& B) {
    return inv(z_reciprocal(A, B));
}

template <Scalar T>
T z_o(const Multiset<T>& A) {
    return inv(zo_reciprocal(A));
}

template <Scalar T>
T z_s(const Multiset<T>& A) {
    return inv(zs_reciprocal(A));
}

// Z(A,B;C,D) = Z(A,B) Z(C,D) / (Z(A,D) Z(B,C))
template <Scalar T>
T z_composite(const Multiset<T>& A, const Multiset<T>& B, const Multiset<T>& C, const Multiset<T>& D) {
    return z_reciprocal(A, D) * z_reciprocal(B, C) / (z_reciprocal(A, B) * z_reciprocal(C, D));
}

template <Scalar T>
T z_o_with(const Multiset<T>& A, const Multiset<T>& C) {
    return z_reciprocal(A, C) / (zo_reciprocal(A) * zs_reciprocal(C));
}

// (A minus the positions in U) followed by the inverses of T.
template <Scalar T>
Multiset<T> surgery(const Multiset<T>& A, const std::vector<std::size_t>& U, const Multiset<T>& Tset) {
    std::vector<bool> removed(A.size(), false);
    for (auto u : U) {
        if (u >= A.size() || removed[u]) throw ValidationError("surgery: U is not a subset of A");
        removed[u] = true;
    }
    Multiset<T> out;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (!removed[i]) out.push_back(A[i]);
    for (const auto& t : Tset) {
        if (t.is_zero()) throw SingularError("surgery: cannot invert 0");
        out.push_back(inv(t));
    }
    return out;
}

// prod u^n
template <Scalar T>
T pow_prod(const Multiset<T>& U, long n) {
    T p(1);
    for (const auto& u : U) {
        if (n < 0 && u.is_zero()) throw SingularError("pow_prod: 0 raised to a negative power");
        p *= ipow(u, n);
    }
    return p;
}

template <Scalar T>
Multiset<T> inverses(const Multiset<T>& A) {
    return surgery(Multiset<T>{}, {}, A);
}

template <Scalar T>
Multiset<T> concat(Multiset<T> A, const Multiset<T>& B) {
    A.insert(A.end(), B.begin(), B.end());
    return A;
}

}  // namespace toeplitz
