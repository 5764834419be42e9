#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agtaut/arith.hpp"
#include "agtaut/gw.hpp"

using namespace agtaut;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_CASE("tau_1 closed form") {
  CHECK(gw_tau1_lambda(2, 1) == q(1, 288));
  CHECK(gw_tau1_lambda(2, 2) == q(1, 32));
  CHECK(gw_tau1_lambda(3, 1) == q(1, 17280));
  CHECK(gw_tau1_lambda(3, 2) == q(11, 5760));
  CHECK_THROWS_AS(gw_tau1_lambda(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gw_tau1_lambda(2, 0), std::invalid_argument);
}

TEST_CASE("triple Hodge integral") {
  CHECK(triple_hodge_integral(2) == q(1, 5760));
  CHECK(triple_hodge_integral(3) == q(1, 1451520));
  CHECK_THROWS_AS(triple_hodge_integral(1), std::invalid_argument);
}

TEST_CASE("conjecture predictor") {
  CHECK(conjecture_prediction(4, 3, 2, q(0)) == q(0));
  CHECK(conjecture_prediction(2, 1, 1, q(2, 5760)) == q(1, 288));
  CHECK(conjecture_prediction(3, 2, 1, Rational(4) * triple_hodge_integral(3)) ==
        gw_tau1_lambda(3, 2));
  GWPrediction p = predict_tau1(2, 2);
  CHECK(p.g == 2);
  CHECK(p.d == 2);
  CHECK(p.i == 1);
  CHECK(p.value == q(1, 32));
}

TEST_CASE("consistency chain") {
  for (unsigned g = 2; g <= 10; ++g) {
    Rational integral = Rational(2 * g - 2) * triple_hodge_integral(g);
    Rational per_sigma = gw_tau1_lambda(g, 1);
    for (std::uint64_t d = 1; d <= 50; ++d) {
      REQUIRE(conjecture_prediction(g, d, 1, integral) == gw_tau1_lambda(g, d));
      REQUIRE(gw_tau1_lambda(g, d) / sigma(static_cast<int>(2 * g - 1), d) == per_sigma);
    }
  }
}
