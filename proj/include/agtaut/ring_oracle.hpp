#pragma once

// Linear-algebra oracle for the tautological ring, independent of the
// rewriting in reduce().  For a homogeneous polynomial of weight w it
// spans the weight-w slice of the ideal by products of the homogeneous
// parts of c(E)c(E^v) - 1 (expanded directly, not via relation()) and of
// lambda_g with monomials, row-reduces over Q, and reads off the
// coordinates in the square-free basis.

#include "agtaut/taut_ring.hpp"

namespace agtaut {

// Monomial enumeration is exponential in g.
inline constexpr unsigned kOracleMaxGenus = 6;

// All exponent vectors of the given weight in lambda_1..lambda_g.
std::vector<Exponents> monomials_of_weight(unsigned g, unsigned w);

// Requires g <= kOracleMaxGenus and p homogeneous of weight <= C(g,2);
// throws std::invalid_argument otherwise.  Throws std::logic_error if the
// square-free monomials are dependent modulo the ideal slice or fail to
// span the quotient.
TautClass oracle_reduce(LambdaPolynomial const& p);

}  // namespace agtaut
