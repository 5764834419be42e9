#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agtaut/ring_oracle.hpp"

using namespace agtaut;

namespace {

LambdaPolynomial lam(unsigned g, std::vector<unsigned> factors, Rational c = 1) {
  return LambdaPolynomial::product_of(g, factors, c);
}

}  // namespace

TEST_CASE("oracle examples") {
  CHECK(oracle_reduce(lam(3, {1, 1})) == TautClass::basis(3, {2}, 2));
  CHECK(oracle_reduce(lam(4, {2, 3})) == TautClass::basis(4, {2, 3}));
  CHECK(oracle_reduce(lam(4, {1, 1, 2})) == TautClass::basis(4, {1, 3}, 4));
  CHECK(oracle_reduce(lam(5, {1, 1, 1, 1})) ==
        TautClass::basis(5, {1, 3}, 8) - TautClass::basis(5, {4}, 8));
  CHECK(oracle_reduce(LambdaPolynomial::constant(3, 7)) == TautClass::one(3) * Rational(7));
  CHECK(oracle_reduce(LambdaPolynomial(4)).is_zero());
}

TEST_CASE("positive-weight parts of c(E)c(E^v) vanish") {
  for (unsigned g = 2; g <= 5; ++g) {
    LambdaPolynomial c = chern_product(g);
    for (unsigned w = 1; w <= socle_degree(g); ++w) {
      CHECK(oracle_reduce(c.homogeneous_part(w)).is_zero());
    }
  }
}

TEST_CASE("monomial enumeration") {
  CHECK(monomials_of_weight(3, 0).size() == 1);
  CHECK(monomials_of_weight(3, 2).size() == 2);  // l1^2, l2
  CHECK(monomials_of_weight(4, 4).size() == 5);  // partitions of 4
  for (auto const& e : monomials_of_weight(4, 6)) {
    CHECK(weight(e) == 6);
  }
}

TEST_CASE("oracle agrees with rewriting on every monomial, g <= 4") {
  for (unsigned g = 1; g <= 4; ++g) {
    for (unsigned w = 0; w <= socle_degree(g); ++w) {
      for (auto const& e : monomials_of_weight(g, w)) {
        auto p = LambdaPolynomial::monomial(g, e);
        REQUIRE(oracle_reduce(p) == reduce(p));
      }
    }
  }
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(oracle_reduce(lam(7, {1})), std::invalid_argument);
  CHECK_THROWS_AS(oracle_reduce(lam(3, {1}) + lam(3, {2})), std::invalid_argument);
  CHECK_THROWS_AS(oracle_reduce(lam(3, {2, 2})), std::invalid_argument);
}
