#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"

namespace th_test {

using toeplitz::ComplexFloat;
using toeplitz::GaussianRational;
using Q = GaussianRational;

inline Q q(const char* text) { return toeplitz::parse_scalar(text); }

inline std::vector<Q> qs(std::initializer_list<const char*> xs) {
    std::vector<Q> out;
    for (const char* x : xs) out.push_back(q(x));
    return out;
}

inline toeplitz::RationalSymbol<Q> bc(std::initializer_list<const char*> a, std::initializer_list<const char*> b,
                                      std::initializer_list<const char*> c, std::initializer_list<const char*> d) {
    return {qs(a), qs(b), qs(c), qs(d)};
}

inline toeplitz::RationalSymbol<Q> inner_single() { return bc({"1/2"}, {"1/3"}, {"1/4"}, {"1/5"}); }
inline toeplitz::RationalSymbol<Q> outer_zero() { return bc({"2"}, {"1/3"}, {"1/4"}, {"1/5"}); }
inline toeplitz::RationalSymbol<Q> complex_single() { return bc({"1/5"}, {"i/2"}, {"1/3"}, {"1/4"}); }
inline toeplitz::RationalSymbol<Q> mixed_sizes() { return bc({"1/5", "3/5"}, {"i/2"}, {"1/3", "i/3"}, {"1/4"}); }

}  // namespace th_test
