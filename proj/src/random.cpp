#include "toeplitz/random.hpp"

#include <cmath>
#include <numbers>

namespace toeplitz {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

long SplitMix64::range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

ComplexFloat random_in_disk(SplitMix64& rng, double radius) {
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return ComplexFloat(std::polar(r, theta));
}

GaussianRational random_rational(SplitMix64& rng, double radius, long max_den, double complex_prob) {
    for (;;) {
        const long q = rng.range(2, max_den);
        const bool cplx = rng.uniform() < complex_prob;
        const auto z = random_in_disk(rng, radius).value();
        const long p = std::lround(z.real() * static_cast<double>(q));
        const long r = cplx ? std::lround(z.imag() * static_cast<double>(q)) : 0;
        const GaussianRational x(mpq_class(p, q), mpq_class(r, q));
        if (std::abs(to_complex(x)) < radius) return x;
    }
}

namespace {

template <class Draw>
auto draw_symbol(const SymbolDraw& spec, Draw&& one) {
    using T = decltype(one());
    RationalSymbol<T> s;
    std::vector<std::complex<double>> taken;
    auto fill = [&](std::vector<T>& set, std::size_t count) {
        while (set.size() < count) {
            const T x = one();
            const auto z = to_complex(x);
            if (std::abs(z) < spec.min_modulus) continue;
            bool close = false;
            for (const auto& w : taken) close = close || std::abs(z - w) < spec.separation;
            if (close) continue;
            taken.push_back(z);
            set.push_back(x);
        }
    };
    fill(s.a, spec.na);
    fill(s.b, spec.nb);
    fill(s.c, spec.nc);
    fill(s.d, spec.nd);
    return s;
}

}  // namespace

RationalSymbol<ComplexFloat> random_float_symbol(SplitMix64& rng, const SymbolDraw& draw) {
    return draw_symbol(draw, [&] { return random_in_disk(rng, draw.radius); });
}

RationalSymbol<GaussianRational> random_exact_symbol(SplitMix64& rng, const SymbolDraw& draw) {
    return draw_symbol(draw, [&] { return random_rational(rng, draw.radius); });
}

}  // namespace toeplitz
