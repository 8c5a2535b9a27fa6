#include "toeplitz/day_toeplitz.hpp"

#include <cmath>

#include "toeplitz/matrix.hpp"

namespace toeplitz {

namespace {

struct Rates {
    double plus = 0.0, minus = 0.0;  // max modulus over (B, D) and (A, C)
    double n_plus = 0.0, n_minus = 0.0;
};

Rates rates_of(const RationalSymbol<ComplexFloat>& s) {
    Rates r;
    for (const auto& x : s.b) r.plus = std::max(r.plus, modulus(x));
    for (const auto& x : s.d) r.plus = std::max(r.plus, modulus(x));
    for (const auto& x : s.a) r.minus = std::max(r.minus, modulus(x));
    for (const auto& x : s.c) r.minus = std::max(r.minus, modulus(x));
    r.n_plus = static_cast<double>(s.b.size() + s.d.size());
    r.n_minus = static_cast<double>(s.a.size() + s.c.size());
    return r;
}

double geometric_tail(double rate, long from) {
    if (rate == 0.0) return 0.0;
    return std::pow(rate, static_cast<double>(from)) / (1.0 - rate);
}

}  // namespace

SeriesValue szego_E_series(const RationalSymbol<ComplexFloat>& s, long J) {
    detail::require_inner_zeros(s);
    if (J < 1) throw ValidationError("series truncation must be at least 1");
    std::complex<double> exponent = 0.0;
    for (long k = 1; k <= J; ++k)
        exponent += static_cast<double>(k) * log_coefficient(s, k).value() * log_coefficient(s, -k).value();
    const auto r = rates_of(s);
    SeriesValue out{ComplexFloat(std::exp(exponent)), r.n_plus * r.n_minus * geometric_tail(r.plus * r.minus, J + 1), J};
    return out;
}

SeriesValue szego_E_th_series(const RationalSymbol<ComplexFloat>& s, long J) {
    detail::require_inner_zeros(s);
    if (J < 1) throw ValidationError("series truncation must be at least 1");
    std::complex<double> exponent = 0.0;
    for (long k = 1; k <= J; ++k) {
        const auto lk = log_coefficient(s, k).value();
        const auto lmk = log_coefficient(s, -k).value();
        if (k % 2) exponent += lk;
        exponent += -0.5 * static_cast<double>(k) * lk * lk + static_cast<double>(k) * lk * lmk;
    }
    const auto r = rates_of(s);
    const double tail = r.n_plus * geometric_tail(r.plus, J + 1) +
                        0.5 * r.n_plus * r.n_plus * geometric_tail(r.plus * r.plus, J + 1) +
                        r.n_plus * r.n_minus * geometric_tail(r.plus * r.minus, J + 1);
    return {ComplexFloat(std::exp(exponent)), tail, J};
}

long adaptive_truncation(double max_modulus) {
    if (!(max_modulus < 1.0)) throw NumericalError("truncation bound unreachable: a parameter has modulus ≥ 1");
    if (max_modulus <= 1e-15) return 4;
    const double m = std::ceil(std::log(1e-15) / std::log(max_modulus));
    if (m > 2048) throw NumericalError("truncation bound unreachable within M ≤ 2048");
    return std::max(4L, static_cast<long>(m));
}

FredholmValue bocg_det_toeplitz(const RationalSymbol<ComplexFloat>& s, long n, long M) {
    if (n < 1) throw ValidationError("n must be at least 1");
    detail::require_inner_zeros(s);
    double maxmod = 0.0;
    for (const auto* set : {&s.a, &s.b, &s.c, &s.d})
        for (const auto& x : *set) maxmod = std::max(maxmod, modulus(x));
    if (M == 0) M = adaptive_truncation(maxmod);
    if (M < 1 || M > 2048) throw ValidationError("truncation M must lie in [1, 2048]");

    // u = phi_- / phi_+ and v = tilde(phi_+) / tilde(phi_-) in parameter form
    const RationalSymbol<ComplexFloat> u{s.a, s.d, s.c, s.b};
    const RationalSymbol<ComplexFloat> v{s.b, s.c, s.d, s.a};
    const FourierCoefficients<ComplexFloat> uc(u), vc(v);
    std::vector<ComplexFloat> uj, vj;  // index n + 1 + m, m = 0 .. 2M - 2
    for (long m = 0; m <= 2 * M - 2; ++m) {
        uj.push_back(uc(n + 1 + m));
        vj.push_back(vc(n + 1 + m));
    }
    const auto size = static_cast<std::size_t>(M);
    DenseMatrix<ComplexFloat> k = DenseMatrix<ComplexFloat>::identity(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            std::complex<double> acc = 0.0;
            for (std::size_t l = 0; l < size; ++l) acc += uj[i + l].value() * vj[l + j].value();
            k(i, j) -= ComplexFloat(acc);
        }
    const ComplexFloat g = szego_G(s);
    const ComplexFloat e = szego_E(s);
    return {ipow(g, n) * e * det_lu(k), M};
}

}  // namespace toeplitz
