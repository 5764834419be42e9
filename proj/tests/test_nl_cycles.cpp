#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agtaut/arith.hpp"
#include "agtaut/nl_cycles.hpp"

using namespace agtaut;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
PolarizationType chain(std::vector<std::uint64_t> v) { return PolarizationType(std::move(v)); }

}  // namespace

TEST_CASE("product-locus projections") {
  CHECK(taut_product_cycle(6, 1) == TautClass::basis(6, {5}, q(2730, 691)));
  CHECK(taut_product_cycle(2, 1) == TautClass::basis(2, {1}, 10));
  CHECK(taut_product_cycle(4, 2) == TautClass::basis(4, {1, 3}, 42));
  CHECK_THROWS_AS(taut_product_cycle(8, 3), OutOfScopeError);
  CHECK_THROWS_AS(taut_product_cycle(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(taut_product_cycle(1, 1), std::invalid_argument);
}

TEST_CASE("NL constant") {
  CHECK(nl_constant(3, chain({2})) == q(30));
  CHECK(nl_constant(4, chain({1, 2})) == q(6));
  for (unsigned g = 2; g <= 8; ++g) {
    for (unsigned u = 1; 2 * u <= g; ++u) {
      CHECK(nl_constant(g, PolarizationType::principal(u)) == q(1));
    }
  }
  CHECK_THROWS_AS(nl_constant(3, chain({1, 2})), std::invalid_argument);
}

TEST_CASE("NL projections") {
  CHECK(taut_nl(2, chain({2})) == TautClass::basis(2, {1}, 60));
  CHECK(taut_nl(3, chain({1})) == taut_product_cycle(3, 1));
  CHECK(taut_nl(4, chain({1, 2})) == TautClass::basis(4, {1, 3}, 252));
  CHECK(taut_nl(5, chain({2, 2})) == TautClass::basis(5, {2, 4}, 332640));
  CHECK_THROWS_AS(taut_nl(6, chain({1, 1, 2})), OutOfScopeError);
}

TEST_CASE("displayed specializations") {
  for (unsigned g = 2; g <= 8; ++g) {
    CHECK(taut_nl_d_special(g, 1) == taut_product_cycle(g, 1));
  }
  CHECK(taut_nl_d_special(2, 2) == TautClass::basis(2, {1}, 60));
  CHECK(taut_nl_d_special(3, 3) == TautClass::basis(3, {2}, 5040));
  CHECK(taut_nl_pair_special(4, 1, 1) == taut_product_cycle(4, 2));
  CHECK(taut_nl_pair_special(4, 1, 2) == taut_nl(4, chain({1, 2})));
  CHECK(taut_nl_pair_special(5, 2, 2) == taut_nl(5, chain({2, 2})));
  CHECK_THROWS_AS(taut_nl_pair_special(4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(taut_nl_pair_special(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(taut_nl_d_special(2, 0), std::invalid_argument);
}

TEST_CASE("general constant matches the specializations") {
  for (unsigned g = 2; g <= 8; ++g) {
    for (std::uint64_t d = 1; d <= 60; ++d) {
      REQUIRE(taut_nl(g, chain({d})) == taut_nl_d_special(g, d));
    }
  }
  for (unsigned g = 4; g <= 8; ++g) {
    for (std::uint64_t d2 = 1; d2 <= 12; ++d2) {
      for (auto d1 : divisors(d2)) {
        REQUIRE(taut_nl(g, chain({d1, d2})) == taut_nl_pair_special(g, d1, d2));
      }
    }
  }
}

TEST_CASE("NL classes are killed by lambda_{g-1}") {
  for (unsigned g = 2; g <= 8; ++g) {
    for (std::uint64_t d = 1; d <= 6; ++d) {
      CHECK(multiply(taut_nl_d_special(g, d), lambda_class(g, g - 1)).is_zero());
    }
  }
}

TEST_CASE("basis change matrices") {
  CHECK(tilde_to_plain(1) == Matrix::identity(1));
  CHECK(tilde_to_plain(4)(3, 1) == q(3));
  CHECK(tilde_to_plain(6)(5, 0) == q(12));
  CHECK(tilde_to_plain(6)(5, 3) == q(0));
  Matrix inv2(2, 2);
  inv2(0, 0) = 1;
  inv2(1, 0) = -3;
  inv2(1, 1) = 1;
  CHECK(plain_to_tilde(2) == inv2);
  for (unsigned D = 1; D <= 100; D += 11) {
    CHECK(plain_to_tilde(D) * tilde_to_plain(D) == Matrix::identity(D));
    CHECK(tilde_to_plain(D).inverse().value() == plain_to_tilde(D));
  }
  CHECK_THROWS_AS(tilde_to_plain(0), std::invalid_argument);
}

TEST_CASE("NLt projections") {
  CHECK(taut_nl_tilde(2, 0) == TautClass::basis(2, {1}, q(1, 24)));
  CHECK(taut_nl_tilde(3, 0) == TautClass::basis(3, {2}, q(-1, 24)));
  CHECK(taut_nl_tilde(2, 1) == TautClass::basis(2, {1}, 10));
  CHECK(taut_nl_tilde(2, 2) == TautClass::basis(2, {1}, 90));
  for (unsigned g = 2; g <= 8; ++g) {
    for (std::uint64_t d = 1; d <= 200; ++d) {
      REQUIRE(taut_nl_tilde_divisor_route(g, d) == taut_nl_tilde_closed_form(g, d));
    }
  }
}

TEST_CASE("Eisenstein series") {
  CHECK(eisenstein_series(2, 2).str() == "1 + 240 q + 2160 q^2");
  CHECK(eisenstein_series(3, 1) == QSeries(1, {q(1), q(-504)}));
  CHECK(eisenstein_series(6, 1)[1] == q(65520, 691));
  for (unsigned g = 2; g <= 8; ++g) {
    QSeries e = eisenstein_series(g, 50);
    CHECK(e[0] == q(1));
    Rational scale = q(g % 2 == 0 ? 1 : -1, 24);
    for (unsigned d = 0; d <= 50; ++d) {
      REQUIRE(scale * e[d] == taut_nl_tilde(g, d).coefficient(make_set({g - 1})));
    }
  }
  CHECK_THROWS_AS(eisenstein_series(1, 3), std::invalid_argument);
}

TEST_CASE("composition diagnostic reports the mismatch without asserting") {
  auto agree = diagnose_nl_composition(3, chain({2}));
  CHECK(agree.displayed == q(30));
  CHECK(agree.composed == q(30));
  CHECK(agree.agree());

  auto pair = diagnose_nl_composition(4, chain({1, 2}));
  CHECK(pair.displayed == q(6));
  CHECK(pair.composed == q(150));
  CHECK_FALSE(pair.agree());
  CHECK(pair.ratio() == q(25));

  auto wide = diagnose_nl_composition(5, chain({2, 4}));
  CHECK(wide.displayed == q(387072));
  CHECK(wide.composed == q(9676800));
}
