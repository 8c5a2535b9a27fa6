#include "toeplitz/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "toeplitz/fredholm.hpp"
#include "toeplitz/random.hpp"
#include "toeplitz/zfun.hpp"

namespace toeplitz {

namespace {

using Exact = GaussianRational;
using Float = ComplexFloat;

std::vector<Float> to_float(const std::vector<Exact>& xs) {
    std::vector<Float> out;
    for (const auto& x : xs) out.push_back(from_exact<Float>(x));
    return out;
}

// Distinct nonzero rationals with no pair (or self pair) multiplying to 1.
std::vector<Exact> draw_set(SplitMix64& rng, std::size_t size, std::vector<Exact>& taken, double radius = 0.95) {
    std::vector<Exact> out;
    while (out.size() < size) {
        const Exact x = random_rational(rng, radius);
        if (x.is_zero() || x * x == Exact(1)) continue;
        bool bad = false;
        for (const auto& y : taken) bad = bad || y == x || x * y == Exact(1);
        if (bad) continue;
        taken.push_back(x);
        out.push_back(x);
    }
    return out;
}

// Runs `trial` over a fresh split of the generator, catching nothing: a
// singular draw is a failure of the generator and should surface.
template <class Trial>
SuiteReport run(const std::string& name, std::uint64_t seed, int trials, double tol, Trial&& trial) {
    SuiteReport rep{name, trials, 0, 0.0, tol};
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto sub = rng.split();
        const auto [exact_ok, residual] = trial(sub);
        rep.max_residual = std::max(rep.max_residual, residual);
        if (exact_ok && residual <= tol) ++rep.passed;
    }
    return rep;
}

struct Check {
    bool exact_ok = true;
    double residual = 0.0;
    void add(const Exact& lhs, const Exact& rhs) { exact_ok = exact_ok && lhs == rhs; }
    void add(const Float& lhs, const Float& rhs) { residual = std::max(residual, relative_error(lhs, rhs)); }
};

template <Scalar T>
void z_properties(const std::vector<T>& A, const std::vector<T>& B, const std::vector<T>& C, Check& chk) {
    const long na = static_cast<long>(A.size()), nb = static_cast<long>(B.size());
    // symmetry
    chk.add(z(A, B), z(B, A));
    // multiplicative in the first argument
    chk.add(z(concat(A, B), C), z(A, C) * z(B, C));
    // Z_O of a union
    chk.add(z_o(concat(A, B)), z_o(A) * z_o(B) * z(A, B));
    // product of differences
    T lhs4(1);
    for (const auto& a : A)
        for (const auto& b : B) lhs4 /= a - b;
    chk.add(lhs4, pow_prod(A, -nb) * z(inverses(A), B));
    // inverting both arguments
    T rhs5 = pow_prod(A, -nb) * pow_prod(B, -na) * z(inverses(A), inverses(B));
    if ((na * nb) % 2) rhs5 = -rhs5;
    chk.add(z(A, B), rhs5);
    // inverting the Z_O argument
    T rhs6 = pow_prod(A, 1 - na) * z_o(inverses(A));
    if ((na * (na - 1) / 2) % 2) rhs6 = -rhs6;
    chk.add(z_o(A), rhs6);
}

}  // namespace

SuiteReport z_property_suite(std::uint64_t seed, int trials) {
    return run("Z-function algebraic properties", seed, trials, 1e-12, [](SplitMix64& rng) {
        std::vector<Exact> taken;
        const auto A = draw_set(rng, static_cast<std::size_t>(rng.range(1, 3)), taken);
        const auto B = draw_set(rng, static_cast<std::size_t>(rng.range(1, 3)), taken);
        const auto C = draw_set(rng, static_cast<std::size_t>(rng.range(0, 2)), taken);
        Check chk;
        z_properties(A, B, C, chk);
        z_properties(to_float(A), to_float(B), to_float(C), chk);
        return std::pair{chk.exact_ok, chk.residual};
    });
}

SuiteReport cauchy_suite(std::uint64_t seed, int trials) {
    return run("Cauchy-type determinant, n <= 6", seed, trials, 1e-10, [](SplitMix64& rng) {
        const auto n = static_cast<std::size_t>(rng.range(1, 6));
        std::vector<Exact> taken;
        const auto S = draw_set(rng, n, taken);
        const auto T = draw_set(rng, n, taken);
        Check chk;
        const auto e = cauchy_type_det(S, T);
        chk.add(e.direct, e.closed);
        const auto f = cauchy_type_det(to_float(S), to_float(T));
        chk.add(f.direct, f.closed);
        return std::pair{chk.exact_ok, chk.residual};
    });
}

SuiteReport vanishing_suite(std::uint64_t seed, int trials) {
    return run("vanishing coefficient combination, k <= 3", seed, trials, 1e-11, [](SplitMix64& rng) {
        const auto k = static_cast<std::size_t>(rng.range(1, 3));
        SymbolDraw draw{k, k, k, k, 0.9, 0.08, 0.05};
        const auto s = random_exact_symbol(rng, draw);
        const auto sf = to_float(s);
        bool exact_ok = true;
        double residual = 0.0;
        const auto al = alphas(s);
        const auto alf = alphas(sf);
        for (std::size_t i = 0; i < k; ++i) {
            exact_ok = exact_ok && vanishing_residual(s, al, i).value.is_zero();
            const auto r = vanishing_residual(sf, alf, i);
            residual = std::max(residual, modulus(r.value) / r.scale);
        }
        return std::pair{exact_ok, residual};
    });
}

SuiteReport d_i_identity_suite(std::uint64_t seed, int trials) {
    return run("D_I repeated-parameter identities", seed, trials, 1e-12, [](SplitMix64& rng) {
        const auto l = static_cast<std::size_t>(rng.range(2, 3));
        std::vector<Exact> taken;
        // small moduli keep the truncated direct sum below 1e-15 of its terms
        auto t = draw_set(rng, l, taken, 0.5);
        auto s = draw_set(rng, l, taken, 0.5);
        std::vector<long> I;
        for (std::size_t g = 0; g < l; ++g) I.push_back(rng.range(0, 6));
        const auto i = static_cast<std::size_t>(rng.range(0, static_cast<long>(l) - 2));
        const long n = rng.range(1, 4);

        // repeated t: every D_I vanishes
        auto t_rep = t;
        t_rep[i + 1] = t_rep[i];
        bool exact_ok = d_i_det(I, t_rep, s).is_zero();

        // repeated s: the tail sum vanishes, in closed form exactly and as a
        // truncated direct double sum in binary64 (l = 2 slices only)
        auto s_rep = s;
        s_rep[i + 1] = s_rep[i];
        exact_ok = exact_ok && d_i_tail_sum(t, s_rep, n).is_zero();

        const auto tf = to_float(t), sf = to_float(s_rep);
        std::complex<double> total = 0.0;
        double scale = 0.0;
        const long N = l == 2 ? 40 : 26;
        std::vector<long> J(l, n);
        std::function<void(std::size_t)> walk = [&](std::size_t g) {
            if (g == l) {
                const auto v = d_i_det(J, tf, sf).value();
                total += v;
                scale = std::max(scale, std::abs(v));
                return;
            }
            for (long x = n; x < n + N; ++x) {
                J[g] = x;
                walk(g + 1);
            }
        };
        walk(0);
        const double residual = scale > 0 ? std::abs(total) / scale : 0.0;
        return std::pair{exact_ok, residual};
    });
}

std::vector<SuiteReport> run_identity_suites(std::uint64_t seed, int trials) {
    SplitMix64 root(seed);
    std::vector<SuiteReport> out;
    out.push_back(z_property_suite(root.next(), trials));
    out.push_back(cauchy_suite(root.next(), trials));
    out.push_back(vanishing_suite(root.next(), trials));
    out.push_back(d_i_identity_suite(root.next(), trials));
    return out;
}

}  // namespace toeplitz
