#include "doctest.h"
#include "helpers.hpp"
#include "toeplitz/identities.hpp"
#include "toeplitz/zfun.hpp"

using namespace toeplitz;
using namespace th_test;

TEST_SUITE("zfun") {

TEST_CASE("Z and its relatives on small sets") {
    const Multiset<Q> none;
    CHECK(z(none, qs({"1/3"})) == Q(1));
    CHECK(z(qs({"1/2"}), qs({"1/3"})) == q("6/5"));
    CHECK(z_composite(none, none, none, none) == Q(1));
    CHECK(z_composite(qs({"1/2"}), qs({"1/3"}), qs({"1/4"}), qs({"1/5"})) == q("99/95"));
    CHECK(z_o(qs({"7/3"})) == Q(1));
    CHECK(z_s(qs({"1/2"})) == q("4/3"));
    CHECK(z_o(qs({"1/2", "1/3"})) == q("6/5"));
    CHECK(z_s(qs({"1/2", "1/3"})) == q("4/3") * q("9/8") * q("6/5"));
}

TEST_CASE("Z_O(A; C)") {
    const auto A = qs({"1/2", "i/3"});
    const auto C = qs({"1/4"});
    CHECK(z_o_with(A, C) == z_o(A) * z_s(C) / z(A, C));
}

TEST_CASE("Z poles are reported") {
    CHECK_THROWS_AS(z(qs({"2"}), qs({"1/2"})), SingularError);
    CHECK_THROWS_AS(z_s(qs({"-1"})), SingularError);
    const std::vector<ComplexFloat> x{ComplexFloat(2.0)}, y{ComplexFloat(0.5 + 1e-15)};
    CHECK_THROWS_AS(z(x, y), SingularError);
}

TEST_CASE("surgery") {
    const auto A = qs({"1/2", "1/3"});
    CHECK(surgery(A, {}, Multiset<Q>{}) == A);
    CHECK(surgery(A, {0}, qs({"1/5"})) == qs({"1/3", "5"}));
    const auto T = qs({"2", "-1/7", "i"});
    const auto out = surgery(A, {1}, T);
    CHECK(out.size() == A.size() - 1 + T.size());
    CHECK_THROWS_AS(surgery(A, {0}, qs({"0"})), SingularError);
    CHECK_THROWS_AS(surgery(A, {5}, Multiset<Q>{}), ValidationError);
}

TEST_CASE("pow_prod") {
    CHECK(pow_prod(Multiset<Q>{}, 4) == Q(1));
    CHECK(pow_prod(qs({"1/2", "1/3"}), 2) == q("1/36"));
    CHECK(pow_prod(qs({"1/2", "1/3"}), 0) == Q(1));
    CHECK(pow_prod(qs({"1/2", "1/3"}), -1) == Q(6));
    CHECK_THROWS_AS(pow_prod(qs({"0"}), -1), SingularError);
}

TEST_CASE("permutation invariance") {
    const auto A = qs({"1/2", "i/3", "-2/5"});
    const auto Ap = qs({"-2/5", "1/2", "i/3"});
    const auto B = qs({"1/7", "3/4"});
    CHECK(z(A, B) == z(Ap, B));
    CHECK(z_o(A) == z_o(Ap));
    CHECK(z_s(A) == z_s(Ap));
}

TEST_CASE("property suite over seeded random sets") {
    const auto rep = z_property_suite(2024, 60);
    CHECK(rep.passed == rep.trials);
    CHECK(rep.max_residual <= 1e-12);
}

}
