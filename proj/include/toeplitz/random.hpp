#pragma once

// Seeded draws for the randomized suites. SplitMix64 is used because it is
// splittable and its output (and hence every report) is identical on every
// platform, which std:: distributions do not guarantee.

#include <cstdint>

#include "toeplitz/scalar.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double uniform();                   // [0, 1)
    long range(long lo, long hi);       // [lo, hi]
    SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

private:
    std::uint64_t state_;
};

// Uniform point of the disk |z| < radius.
ComplexFloat random_in_disk(SplitMix64& rng, double radius);

// Gaussian rational p/q + (r/q) i with q <= max_den and modulus < radius;
// real with probability 1 - complex_prob.
GaussianRational random_rational(SplitMix64& rng, double radius, long max_den = 12, double complex_prob = 0.3);

struct SymbolDraw {
    std::size_t na = 1, nb = 1, nc = 1, nd = 1;
    double radius = 0.9;
    double separation = 0.08;  // minimum pairwise distance over all parameters
    double min_modulus = 0.05;
};

// Parameters are pairwise separated across all four sets, so every Z factor
// that appears in the subset sums stays away from its poles.
RationalSymbol<ComplexFloat> random_float_symbol(SplitMix64& rng, const SymbolDraw& draw);
RationalSymbol<GaussianRational> random_exact_symbol(SplitMix64& rng, const SymbolDraw& draw);

}  // namespace toeplitz
