#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agtaut/taut_ring.hpp"

#include <random>

using namespace agtaut;

namespace {

LambdaPolynomial lam(unsigned g, std::vector<unsigned> factors, Rational c = 1) {
  return LambdaPolynomial::product_of(g, factors, c);
}

TautClass basis(unsigned g, std::vector<unsigned> idx, Rational c = 1) {
  return TautClass::basis(g, idx, c);
}

TautClass random_class(unsigned g, std::mt19937& rng) {
  std::uniform_int_distribution<IndexSet> set(0, socle_set(g));
  std::uniform_int_distribution<int> coeff(-5, 5), terms(1, 4);
  TautClass out(g);
  for (int k = terms(rng); k > 0; --k) {
    out.add_term(set(rng), coeff(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("relations") {
  CHECK(relation(1, 3) == lam(3, {1, 1}) - lam(3, {2}, 2));
  CHECK(relation(1, 2) == lam(2, {1, 1}));
  CHECK(relation(2, 4) == lam(4, {2, 2}) - lam(4, {1, 3}, 2));
  CHECK(relation(2, 5) == lam(5, {2, 2}) - lam(5, {1, 3}, 2) + lam(5, {4}, 2));
  CHECK_THROWS_AS(relation(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(relation(3, 3), std::invalid_argument);
}

TEST_CASE("relation(k) is the signed degree-2k part of c(E)c(E^v)") {
  for (unsigned g = 2; g <= 8; ++g) {
    LambdaPolynomial c = chern_product(g);
    for (unsigned k = 1; k < g; ++k) {
      LambdaPolynomial part = c.homogeneous_part(2 * k);
      LambdaPolynomial truncated(g);
      for (auto const& [e, coeff] : part.terms()) {
        if (e[g - 1] == 0) {
          truncated.add_term(e, coeff);
        }
      }
      CHECK(relation(k, g) == truncated * Rational(k % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("reduce examples") {
  CHECK(reduce(lam(2, {1, 1})).is_zero());
  CHECK(reduce(lam(3, {1, 1})) == basis(3, {2}, 2));
  CHECK(reduce(lam(3, {1, 1, 1})) == basis(3, {1, 2}, 2));
  CHECK(reduce(lam(4, {1, 1, 2})) == basis(4, {1, 3}, 4));
  CHECK(reduce(lam(4, {2, 2})) == basis(4, {1, 3}, 2));
  CHECK(reduce(lam(5, {1, 1, 1, 1})) == basis(5, {1, 3}, 8) - basis(5, {4}, 8));
  CHECK(reduce(lam(5, {2, 2})) == basis(5, {1, 3}, 2) - basis(5, {4}, 2));
  CHECK(reduce(lam(3, {3})).is_zero());
  CHECK(reduce(lam(4, {0, 2})) == basis(4, {2}));
}

TEST_CASE("generators beyond lambda_g are rejected") {
  CHECK_THROWS_AS(LambdaPolynomial::lambda(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(lam(3, {5}), std::invalid_argument);
  CHECK_THROWS_AS(basis(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(basis(4, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(TautClass(0), std::invalid_argument);
}

TEST_CASE("multiply") {
  TautClass x = basis(4, {1, 2}, 3) + basis(4, {3});
  CHECK(multiply(TautClass::one(4), x) == x);
  for (unsigned g = 2; g <= 10; ++g) {
    CHECK(multiply(lambda_class(g, g - 1), lambda_class(g, g - 1)).is_zero());
    CHECK(lambda_class(g, g).is_zero());
  }
  CHECK(multiply(basis(4, {1}), basis(4, {1, 2})) == basis(4, {1, 3}, 4));
  CHECK_THROWS_AS(multiply(TautClass::one(3), TautClass::one(4)), std::invalid_argument);
}

TEST_CASE("graded dimensions") {
  CHECK(graded_dimension(4, 0) == 1);
  CHECK(graded_dimension(4, 3) == 2);
  CHECK(graded_dimension(5, 5) == 2);
  CHECK(graded_dimension(4, 7) == 0);
  for (unsigned g = 1; g <= 10; ++g) {
    CHECK(graded_dimension(g, socle_degree(g)) == 1);
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= socle_degree(g); ++k) {
      CHECK(graded_dimension(g, k) == graded_dimension(g, socle_degree(g) - k));
      CHECK(graded_basis(g, k).size() == graded_dimension(g, k));
      total += graded_dimension(g, k);
    }
    CHECK(total == (std::uint64_t{1} << (g - 1)));
  }
  CHECK(graded_basis(4, 3) == std::vector<IndexSet>{make_set({1, 2}), make_set({3})});
}

TEST_CASE("socle pairing") {
  for (unsigned g = 1; g <= 6; ++g) {
    CHECK(socle_pair(TautClass::from_set(g, socle_set(g)), TautClass::one(g)) == 1);
  }
  CHECK(socle_pair(basis(3, {1}), basis(3, {2})) == 1);
  CHECK(socle_pair(reduce(lam(3, {1, 1})), basis(3, {1})) == 2);
  CHECK(socle_pair(basis(3, {1}), basis(3, {1})) == 0);
  CHECK_THROWS_AS(socle_pair(TautClass::one(2), TautClass::one(3)), std::invalid_argument);
}

TEST_CASE("pairing matrices") {
  PairingMatrix m0 = pairing_matrix(2, 0);
  CHECK(m0.entries.rows() == 1);
  CHECK(m0.entries(0, 0) == 1);

  // Entries confirmed by a Groebner-basis normal form computation.
  PairingMatrix m = pairing_matrix(4, 3);
  CHECK(m.row_basis == std::vector<IndexSet>{make_set({1, 2}), make_set({3})});
  CHECK(m.column_basis == std::vector<IndexSet>{make_set({3}), make_set({1, 2})});
  CHECK(m.entries(0, 0) == 1);
  CHECK(m.entries(0, 1) == 4);
  CHECK(m.entries(1, 0) == 0);
  CHECK(m.entries(1, 1) == 1);
  CHECK(m.is_nonsingular());

  PairingMatrix m5 = pairing_matrix(5, 5);
  CHECK(m5.entries.rows() == 2);
  CHECK(m5.entries.cols() == 2);
  CHECK(m5.entries.determinant() == 1);

  CHECK_THROWS_AS(pairing_matrix(3, 4), std::invalid_argument);
  for (unsigned g = 1; g <= 6; ++g) {
    for (unsigned k = 0; k <= socle_degree(g); ++k) {
      CHECK(pairing_matrix(g, k).is_nonsingular());
    }
  }
}

TEST_CASE("Mumford relation reduces to zero") {
  for (unsigned g = 1; g <= 8; ++g) {
    CHECK(reduce(chern_product(g) - LambdaPolynomial::constant(g, 1)).is_zero());
  }
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937 rng(2024);
  for (unsigned g = 2; g <= 6; ++g) {
    for (int i = 0; i < 40; ++i) {
      TautClass a = random_class(g, rng), b = random_class(g, rng), c = random_class(g, rng);
      REQUIRE(multiply(a, b) == multiply(b, a));
      REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      REQUIRE(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
    }
  }
}

TEST_CASE("string forms") {
  CHECK(basis(2, {1}, 60).str() == "60 * L(1)");
  CHECK((basis(4, {1, 2}, 2) - basis(4, {3})).str() == "2 * L(1,2) - L(3)");
  CHECK(TautClass(3).str() == "0");
  CHECK((TautClass::one(3) + basis(3, {2}, Rational(BigInt(-1), BigInt(2)))).str() ==
        "1 - 1/2 * L(2)");
}
