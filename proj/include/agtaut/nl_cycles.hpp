#pragma once

// Tautological projections of Noether-Lefschetz cycles and product loci.
//
// taut([NL_{g,delta}]) = c(g, delta) * taut([A_u x A_{g-u}]) with the
// product-locus projections known for u = 1, 2.  The general constant
// nl_constant() is the source of truth; taut_nl_d_special() and
// taut_nl_pair_special() evaluate the specialized closed forms along
// separate code paths and exist to cross-check it.
//
// For u = g/2 the class [NL_{g,delta}] is the full pushforward (degree 2
// onto its image), matching the convention for [A_{g/2} x A_{g/2}]; no
// factor 1/2 is applied.

#include "agtaut/linalg.hpp"
#include "agtaut/polarization.hpp"
#include "agtaut/qseries.hpp"
#include "agtaut/taut_ring.hpp"

#include <cstdint>
#include <stdexcept>

namespace agtaut {

// Raised for requests the closed formulas do not cover (product loci with
// u > 2, and everything built on them).
class OutOfScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// u = 1: g / (6 |B_2g|) lambda_{g-1}
// u = 2: g (g-1) / (360 |B_2g| |B_{2g-2}|) lambda_{g-1} lambda_{g-3}
TautClass taut_product_cycle(unsigned g, unsigned u);

// c(g, delta) for delta = (d_1 | .. | d_u), 2u <= g:
//   prod_k d_k^{2u-4k+2}
//   * prod_{i<j} prod_{p | d_j/d_i} (1 - p^{-2(j-i)}) / (1 - p^{-2(j-i+1)})
//   * d^{2(g-u)+1} * prod_j prod_{p | d_j} (1 - p^{-2(j+g-2u)})
Rational nl_constant(unsigned g, PolarizationType const& delta);

// nl_constant(g, delta) * taut_product_cycle(g, u); u in {1, 2}.
TautClass taut_nl(unsigned g, PolarizationType const& delta);

// g d^{2g-1} / (6 |B_2g|) prod_{p | d} (1 - p^{2-2g}) lambda_{g-1}
TautClass taut_nl_d_special(unsigned g, std::uint64_t d);

// g(g-1) d1^{2g-1} d2^{2g-5} / (360 |B_2g| |B_{2g-2}|)
//   * prod_{p | d1} (1 - p^{6-2g}) prod_{p | d2} (1 - p^{4-2g})
//   * prod_{p | d2/d1} (1 - p^{-2}) / (1 - p^{-4})  lambda_{g-1} lambda_{g-3}
TautClass taut_nl_pair_special(unsigned g, std::uint64_t d1, std::uint64_t d2);

// M[d-1][e-1] = sigma_1(d/e) when e | d, else 0, for 1 <= d, e <= D.
// Takes plain coefficients to tilde coefficients: NLt_d = sum_{e | d} sigma_1(d/e) NL_e.
Matrix tilde_to_plain(unsigned D);
// Exact inverse of tilde_to_plain(D), by forward substitution.
Matrix plain_to_tilde(unsigned D);

// sum_{e | d} sigma_1(d/e) taut_nl_d_special(g, e)
TautClass taut_nl_tilde_divisor_route(unsigned g, std::uint64_t d);
// g sigma_{2g-1}(d) / (6 |B_2g|) lambda_{g-1}
TautClass taut_nl_tilde_closed_form(unsigned g, std::uint64_t d);
// d = 0 is the constant term (-1)^g / 24 lambda_{g-1}.  For d >= 1 both
// routes are evaluated and must agree (std::logic_error otherwise).
TautClass taut_nl_tilde(unsigned g, std::uint64_t d);

// E_2g = 1 - (4g / B_2g) sum_{n >= 1} sigma_{2g-1}(n) q^n, truncated at q^D.
QSeries eisenstein_series(unsigned g, unsigned D);

// The constant c obtained by composing the subgroup-index formulas,
// deg(phi_delta) deg(phi_delta~) / |Sp(K(delta))|, next to nl_constant().
// Reported, never asserted.
struct NlCompositionDiagnostic {
  Rational displayed;   // nl_constant(g, delta)
  Rational composed;
  bool agree() const { return displayed == composed; }
  Rational ratio() const { return composed / displayed; }
};
NlCompositionDiagnostic diagnose_nl_composition(unsigned g, PolarizationType const& delta);

}  // namespace agtaut
