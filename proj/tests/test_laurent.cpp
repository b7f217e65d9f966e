#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "skeinkit/laurent.hpp"

using namespace skeinkit;

namespace {

LaurentPoly2 poly(std::initializer_list<std::tuple<int, int, long long>> terms) {
    LaurentPoly2 p;
    for (auto [v, z, c] : terms) p.add_term({v, z}, c);
    return p;
}

}  // namespace

TEST_CASE("monomials order by z-exponent before v-exponent") {
    CHECK(Monomial{5, 0} < Monomial{-5, 1});
    CHECK(Monomial{-1, 2} < Monomial{1, 2});
    CHECK_FALSE(Monomial{1, 2} < Monomial{1, 2});
}

TEST_CASE("constants and cancellation") {
    CHECK(LaurentPoly2::zero() == LaurentPoly2());
    CHECK(LaurentPoly2::one() == LaurentPoly2::constant(1));
    CHECK(LaurentPoly2::zero().terms().empty());

    LaurentPoly2 p = LaurentPoly2::monomial(2, 1, 3);
    p.add_term({2, 1}, -3);
    CHECK(p == LaurentPoly2::zero());
    CHECK(p.terms().empty());
}

TEST_CASE("ring arithmetic") {
    LaurentPoly2 v = LaurentPoly2::monomial(1, 0);
    LaurentPoly2 z = LaurentPoly2::monomial(0, 1);

    // (v + z)(v - z) = v^2 - z^2
    CHECK((v + z) * (v - z) == poly({{2, 0, 1}, {0, 2, -1}}));

    // delta * z = v^-1 - v
    CHECK(LaurentPoly2::unlink_delta() * z == poly({{-1, 0, 1}, {1, 0, -1}}));

    LaurentPoly2 acc = v;
    acc += z;
    acc -= v;
    CHECK(acc == z);
}

TEST_CASE("scale shifts exponents and multiplies coefficients") {
    LaurentPoly2 p = poly({{2, 0, 2}, {4, 0, -1}, {2, 2, 1}});
    p.scale(-2, 1, -3);
    CHECK(p == poly({{0, 1, -6}, {2, 1, 3}, {0, 3, -3}}));
}

TEST_CASE("unlink values are powers of delta") {
    CHECK(LaurentPoly2::unlink_value(1) == LaurentPoly2::one());
    CHECK(LaurentPoly2::unlink_value(2) == LaurentPoly2::unlink_delta());
    CHECK(LaurentPoly2::unlink_value(4) ==
          LaurentPoly2::unlink_delta() * LaurentPoly2::unlink_delta() *
              LaurentPoly2::unlink_delta());
}

TEST_CASE("z-degree") {
    CHECK(LaurentPoly2::one().z_degree() == 0);
    CHECK(LaurentPoly2::unlink_delta().z_degree() == -1);
    CHECK(poly({{2, 0, 2}, {4, 0, -1}, {2, 2, 1}}).z_degree() == 2);
    CHECK_THROWS_AS((void)LaurentPoly2::zero().z_degree(), std::domain_error);
}

TEST_CASE("text rendering") {
    CHECK(LaurentPoly2::zero().to_text() == "0");
    CHECK(LaurentPoly2::one().to_text() == "1");
    CHECK(LaurentPoly2::constant(-2).to_text() == "-2");
    CHECK(LaurentPoly2::unlink_delta().to_text() == "v^-1 z^-1 - v z^-1");
    CHECK(poly({{2, 0, 2}, {4, 0, -1}, {2, 2, 1}}).to_text() == "2 v^2 - v^4 + v^2 z^2");
    CHECK(poly({{1, 1, 1}, {1, -1, 1}, {3, -1, -1}}).to_text() == "v z^-1 - v^3 z^-1 + v z");
}

TEST_CASE("coefficients are exact integers beyond 64 bits") {
    LaurentPoly2 p = LaurentPoly2::constant(Coeff(1) << 100);
    p += LaurentPoly2::constant(1);
    p -= LaurentPoly2::constant(Coeff(1) << 100);
    CHECK(p == LaurentPoly2::one());
}
