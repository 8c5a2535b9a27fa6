#include "toeplitz/fredholm.hpp"

#include "toeplitz/day_toeplitz.hpp"

namespace toeplitz {

BeResult be_det(const RationalSymbol<ComplexFloat>& s, long n, long M) {
    if (n < 1) throw ValidationError("n must be at least 1");
    detail::require_inner_zeros(s);
    const auto al = alphas(s);
    double maxmod = 0.0;
    for (const auto* set : {&s.a, &s.b, &s.d})
        for (const auto& x : *set) maxmod = std::max(maxmod, modulus(x));
    if (M == 0) M = adaptive_truncation(maxmod);
    if (M < 1 || M > 2048) throw ValidationError("truncation M must lie in [1, 2048]");

    auto window = k_window(s, al, n, M);
    for (std::size_t i = 0; i < window.rows(); ++i) window(i, i) += ComplexFloat(1.0);
    const ComplexFloat e = e_th(s);
    BeResult out{e * det_lu(window), M, std::nullopt};
    if (s.a.size() == 1) out.rank_one_value = e * (ComplexFloat(1.0) + k_tail_trace(s, al, n));
    return out;
}

}  // namespace toeplitz
