#pragma once

// Gromov-Witten side: the predicted invariants of the elliptic-fibration
// geometry and the triple Hodge integral that ties the two displayed
// formulas together.

#include "agtaut/rational.hpp"

#include <cstdint>
#include <string>

namespace agtaut {

struct GWPrediction {
  unsigned g;
  std::uint64_t d;
  unsigned i;
  std::string insertion;
  Rational value;
};

// <tau_1(s) lambda_g lambda_{g-2}>_{g,d} = |B_{2g-2}| sigma_{2g-1}(d) / (24 (2g-2)!)
Rational gw_tau1_lambda(unsigned g, std::uint64_t d);

// int_{M_g} lambda_{g-2} lambda_{g-1} lambda_g
//   = |B_2g| |B_{2g-2}| / (4g (2g-2) (2g-2)!)
Rational triple_hodge_integral(unsigned g);

// (g sigma_{2g-1}(d) / (6 |B_2g|)) * integral, where integral is the
// caller-supplied value of int_{M_{g,1}} psi^i lambda_{g-1} Lambda.
Rational conjecture_prediction(unsigned g, std::uint64_t d, unsigned i, Rational const& integral);

// The tau_1 lambda_g lambda_{g-2} case with the integral supplied as
// (2g-2) * triple_hodge_integral(g).
GWPrediction predict_tau1(unsigned g, std::uint64_t d);

}  // namespace agtaut
