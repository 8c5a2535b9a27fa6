#include "toeplitz/symbol.hpp"

namespace toeplitz {

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty()) out += "; ";
        out += issue;
    }
    return out;
}

int winding_number(const LaurentSymbol<ComplexFloat>& s, int m) {
    if (m < 256) throw ValidationError("winding number needs at least 256 samples");
    double total = 0.0;
    std::complex<double> prev;
    for (int j = 0; j <= m; ++j) {
        const double theta = 2.0 * std::numbers::pi * (j % m) / m;
        const auto v = evaluate(s, ComplexFloat(std::polar(1.0, theta))).value();
        if (std::abs(v) < 1e-9) throw NumericalError("symbol vanishes near unit circle");
        if (j > 0) total += std::arg(v / prev);
        prev = v;
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

ComplexFloat log_coefficient(const RationalSymbol<ComplexFloat>& s, long j) {
    if (j == 0) return ComplexFloat(0.0);
    const bool positive = j > 0;
    const long k = positive ? j : -j;
    // log(1 - x w) = -sum x^k w^k / k
    const auto& zeros = positive ? s.b : s.a;
    const auto& poles = positive ? s.d : s.c;
    std::complex<double> acc = 0.0;
    for (const auto& p : poles) acc += ipow(p, k).value();
    for (const auto& z : zeros) acc -= ipow(z, k).value();
    return ComplexFloat(acc / static_cast<double>(k));
}

}  // namespace toeplitz
