#include "agtaut/gw.hpp"

#include "agtaut/arith.hpp"

#include <stdexcept>

namespace agtaut {

namespace {

void check(unsigned g, std::uint64_t d) {
  if (g < 2) {
    throw std::invalid_argument("GW predictions need g >= 2");
  }
  if (d < 1) {
    throw std::invalid_argument("GW predictions need d >= 1");
  }
}

Rational factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) {
    out *= k;
  }
  return Rational(out);
}

}  // namespace

Rational gw_tau1_lambda(unsigned g, std::uint64_t d) {
  check(g, d);
  return abs_bernoulli(2 * g - 2) * sigma(static_cast<int>(2 * g - 1), d) /
         (Rational(24) * factorial(2 * g - 2));
}

Rational triple_hodge_integral(unsigned g) {
  check(g, 1);
  return abs_bernoulli(2 * g) * abs_bernoulli(2 * g - 2) /
         (Rational(4 * g) * Rational(2 * g - 2) * factorial(2 * g - 2));
}

Rational conjecture_prediction(unsigned g, std::uint64_t d, unsigned, Rational const& integral) {
  check(g, d);
  return Rational(g) * sigma(static_cast<int>(2 * g - 1), d) /
         (Rational(6) * abs_bernoulli(2 * g)) * integral;
}

GWPrediction predict_tau1(unsigned g, std::uint64_t d) {
  Rational integral = Rational(2 * g - 2) * triple_hodge_integral(g);
  return {g, d, 1, "lambda_g lambda_{g-2}", conjecture_prediction(g, d, 1, integral)};
}

}  // namespace agtaut
