#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "toeplitz/day_toeplitz.hpp"
#include "toeplitz/matrix.hpp"

using namespace toeplitz;
using namespace th_test;

namespace {

// The k = 1 piecewise coefficient formula written out by hand.
Q piecewise_k1(const Q& a, const Q& b, const Q& c, const Q& d, long k) {
    const Q one(1);
    if (k > 0) return (one - a * d) * (d - b) * ipow(d, k - 1) / (one - c * d);
    if (k == 0) return (one - a * d) * (d - b) / (d * (one - c * d)) + b / d;
    return (c - a) * (one - b * c) * ipow(c, -k - 1) / (one - c * d);
}

}  // namespace

TEST_SUITE("symbol") {

TEST_CASE("validate") {
    CHECK(validate(inner_single()).ok());
    CHECK(validate(outer_zero()).ok());
    const auto bad = validate(bc({"1/2"}, {"1/3"}, {"3/2"}, {"1/5"}));
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.issues[0] == "|c_1| ≥ 1");
    const auto clash = validate(bc({"1/2"}, {"1/3"}, {"1/4"}, {"1/2"}));
    REQUIRE(clash.issues.size() == 1);
    CHECK(clash.issues[0] == "a_1 and d_1 coincide");
    CHECK(validate(bc({"0"}, {"0"}, {"0"}, {"0"})).ok());
    const auto dbad = validate(bc({}, {}, {}, {"1"}));
    CHECK(dbad.issues[0] == "|d_1| ≥ 1");
}

TEST_CASE("evaluate") {
    CHECK(evaluate(bc({"0"}, {"0"}, {"0"}, {"0"}), q("i")) == Q(1));
    CHECK(evaluate(inner_single(), Q(1)) == q("5/9"));
    CHECK(evaluate(inner_single(), Q(-1)) == q("4/3"));
    CHECK_THROWS_AS(evaluate(bc({}, {}, {"1/2"}, {}), q("1/2")), SingularError);
}

TEST_CASE("Fourier coefficients of the inner single-parameter symbol") {
    const auto s = inner_single();
    CHECK(fourier_coeff(s, 1) == q("-12/95"));
    CHECK(fourier_coeff(s, 0) == q("59/57"));
    CHECK(fourier_coeff(bc({"0"}, {"0"}, {"0"}, {"0"}), 3).is_zero());
    for (long j = -20; j <= 20; ++j) CHECK(fourier_coeff(s, j) == piecewise_k1(s.a[0], s.b[0], s.c[0], s.d[0], j));
}

TEST_CASE("Fourier coefficients with a zero outside the circle") {
    // a = 2: phi_- = (1 - 2/z)/(1 - c/z) is still a finite expansion in 1/z
    const auto s = outer_zero();
    for (long j = -12; j <= 12; ++j) CHECK(fourier_coeff(s, j) == piecewise_k1(s.a[0], s.b[0], s.c[0], s.d[0], j));
}

TEST_CASE("Fourier reconstruction converges geometrically") {
    const auto s = to_float(mixed_sizes());
    const FourierCoefficients<ComplexFloat> phi(s);
    double prev = 1e9;
    for (long J : {10L, 20L, 40L}) {
        double worst = 0.0;
        for (int m = 0; m < 32; ++m) {
            const double theta = 2 * std::numbers::pi * m / 32;
            const std::complex<double> z = std::polar(1.0, theta);
            std::complex<double> acc = 0.0;
            for (long j = -J; j <= J; ++j) acc += phi(j).value() * std::pow(z, static_cast<double>(j));
            worst = std::max(worst, std::abs(acc - evaluate(s, ComplexFloat(z)).value()));
        }
        CHECK(worst < prev / 100);
        prev = worst;
    }
    CHECK(prev < 1e-10);
}

TEST_CASE("coincident poles are unsupported") {
    CHECK_THROWS_AS(fourier_coeff(bc({"1/2"}, {"1/3"}, {"1/4", "1/4"}, {"1/5"}), 0), UnsupportedError);
}

TEST_CASE("day_to_bc") {
    DayForm<Q> f{Q(1), qs({"1/2", "2"}), {}, qs({"1/4"})};
    const auto conv = day_to_bc(f);
    CHECK(conv.symbol.a == qs({"1/2"}));
    CHECK(conv.symbol.b == qs({"1/2"}));
    CHECK(conv.symbol.c == qs({"1/4"}));
    CHECK(conv.symbol.d.empty());
    CHECK(conv.prefactor(3) == Q(-8));

    DayForm<Q> constant{q("3/2"), {}, {}, {}};
    const auto cc = day_to_bc(constant);
    CHECK(cc.symbol == RationalSymbol<Q>{});
    CHECK(cc.prefactor(2) == q("9/4"));

    DayForm<Q> short_form{Q(1), qs({"1/2"}), {}, qs({"1/3", "1/4"})};
    CHECK_THROWS_WITH_AS(day_to_bc(short_form), "p<k, determinant vanishes (no parameter form exists)",
                         ValidationError);

    // pointwise: day value = prefactor base * reassembled parameter form
    DayForm<Q> g{q("2/3"), qs({"1/3", "-3", "i/2"}), qs({"5/2"}), qs({"1/7"})};
    const auto gc = day_to_bc(g);
    for (const char* z : {"1", "i", "3/5+4/5i", "-1"})
        CHECK(evaluate(g, q(z)) == gc.prefactor_base * evaluate(gc.symbol, q(z)));
}

TEST_CASE("wiener_hopf factors multiply back") {
    const auto s = inner_single();
    const auto wh = wiener_hopf(s);
    CHECK(wh.plus == bc({}, {"1/3"}, {}, {"1/5"}));
    CHECK(wh.minus == bc({"1/2"}, {}, {"1/4"}, {}));
    for (const char* z : {"1", "i", "-3/5+4/5i"}) CHECK(evaluate(wh.plus, q(z)) * evaluate(wh.minus, q(z)) == evaluate(s, q(z)));
    const auto trivial = wiener_hopf(RationalSymbol<Q>{});
    CHECK(evaluate(trivial.plus, q("i")) == Q(1));
    CHECK(evaluate(trivial.minus, q("i")) == Q(1));
}

TEST_CASE("psi_of") {
    const auto s = inner_single();
    const auto p = psi_of(s);
    CHECK(p == bc({"1/2", "1/5"}, {"1/5"}, {"1/4", "1/3"}, {"1/3"}));
    CHECK(psi_of(RationalSymbol<Q>{}) == RationalSymbol<Q>{});

    const auto sf = to_float(mixed_sizes());
    const auto wh = wiener_hopf(sf);
    const ComplexFloat z(std::polar(1.0, 0.7));
    const ComplexFloat lhs = evaluate(psi_of(sf), z);
    const ComplexFloat rhs = evaluate(wh.minus, z) / (evaluate(wh.plus, z) * evaluate(wh.plus, inv(z)));
    CHECK(std::abs((lhs - rhs).value()) < 1e-13);
    CHECK(std::abs((evaluate(psi_inverse_of(sf), z) * lhs).value() - 1.0) < 1e-13);
}

TEST_CASE("winding_number") {
    CHECK(winding_number(RationalSymbol<Q>{}) == 0);
    CHECK(winding_number(inner_single()) == 0);
    CHECK(winding_number(mixed_sizes()) == 0);
    // a single zero inside the circle: phi(z) = z - 1/2
    DayForm<Q> f{Q(1), qs({"1/2"}), {}, {}};
    CHECK(winding_number(to_laurent(to_float(f))) == 1);
    CHECK_THROWS_AS(winding_number(inner_single(), 100), ValidationError);
    DayForm<Q> on_circle{Q(1), qs({"1"}), {}, {}};
    CHECK_THROWS_WITH_AS(winding_number(to_laurent(to_float(on_circle))), "symbol vanishes near unit circle",
                         NumericalError);
}

}
