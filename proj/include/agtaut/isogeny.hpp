#pragma once

// Degrees of the level-structure covers phi_delta : A^lev_{g,delta} -> A_g
// and pi_delta : A^lev_{g,delta} -> A_{g,delta}, i.e. the subgroup index
// [Sp_2g(Z) : G_delta[delta]] and |Sp(K(delta))|.
//
// deg_phi has three routes: the closed form, a stratification over the
// congruence filtration Gamma_g[p^i] (one prime at a time), and for g = 1
// a brute-force count over SL_2(Z/d^2).

#include "agtaut/polarization.hpp"
#include "agtaut/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace agtaut {

enum class DegreeRoute { closed_form, stratified, enumeration };

std::string_view route_name(DegreeRoute route);
DegreeRoute parse_route(std::string_view name);

struct DegreeResult {
  Rational value;
  DegreeRoute route;
};

// Divisibility pattern of M - 1 for M in G_delta[delta], at one prime p,
// with delta = (p^{v_1}, .., p^{v_g}) padded to length g.  In block form
// M - 1 = [[A, B], [C, E]] (g x g blocks):
//   a_{rc} divisible by p^{v_r}, b_{rc} by p^{v_r + v_c},
//   c_{rc} unconstrained,        e_{rc} by p^{v_c}.
class ScaledMatrixShape {
 public:
  // Valuations must be non-decreasing (they come from a divisibility chain).
  ScaledMatrixShape(unsigned g, std::vector<unsigned> valuations);
  // Pads delta to length g and takes v_p of every entry.
  static ScaledMatrixShape from_type(unsigned g, PolarizationType const& delta, std::uint64_t p);

  unsigned genus() const { return g_; }
  std::vector<unsigned> const& valuations() const { return v_; }
  // Number of rows with v > 0.
  unsigned h() const;
  unsigned max_valuation() const;
  unsigned valuation_sum() const;

  // 0-based block coordinates.
  unsigned a_exponent(unsigned r, unsigned) const { return v_[r]; }
  unsigned b_exponent(unsigned r, unsigned c) const { return v_[r] + v_[c]; }
  unsigned c_exponent(unsigned, unsigned) const { return 0; }
  unsigned e_exponent(unsigned, unsigned c) const { return v_[c]; }

  // N(i): a-positions (any r, c) plus b-positions with r <= c whose forced
  // exponent is at least i.
  unsigned forced_count(unsigned i) const;
  // sum_{i >= 1} N(i), by summing forced_count.
  unsigned total_forced() const;

 private:
  unsigned g_;
  std::vector<unsigned> v_;
};

// |Sp_2g(F_p)| = p^{g^2} prod_{i=1}^{g} (p^{2i} - 1).
BigInt sp_order_prime(unsigned g, std::uint64_t p);
// |Sp_2g(Z/N)|: p^{(2g^2+g)(k-1)} |Sp_2g(F_p)| per prime power, multiplied by CRT.
BigInt sp_order(unsigned g, std::uint64_t N);

// Ordered h-tuples in F_p^{2g} spanning an h-dimensional isotropic
// subspace.  Both closed forms are evaluated and must agree.
BigInt isotropic_tuple_count(unsigned g, unsigned h, std::uint64_t p);

// delta = (1^k, d^h), k + h = g: d^{h(2g+1)} prod_{p | d} prod_{i=g-h+1}^{g} (1 - p^{-2i}).
DegreeResult deg_phi_special(unsigned g, unsigned k, unsigned h, std::uint64_t d);
// d^{2g+1} prod_j prod_{p | d_j} (1 - p^{-2j}); delta padded to length g.
DegreeResult deg_phi(unsigned g, PolarizationType const& delta);
// Every entry of delta must be a power of p (1 allowed).  Evaluates the
// isotropic-tuple count for the first layer and p^{N(i)} for the rest.
DegreeResult deg_phi_stratified(unsigned g, PolarizationType const& delta, std::uint64_t p);
// Product over the primes of d of deg_phi_stratified on the p-parts.
DegreeResult deg_phi_by_primes(unsigned g, PolarizationType const& delta);

// deg(phi) * prod_k d_k^{2g-4k+2} * prod_{i<j} prod_{p | d_j/d_i}
//   (1 - p^{-2(j-i)}) / (1 - p^{-2(j-i+1)}); delta padded to length g.
DegreeResult deg_pi(unsigned g, PolarizationType const& delta);

// Default and hard upper bound for the enumeration oracle's d.
inline constexpr unsigned kOracleIndexDefaultCap = 8;
inline constexpr unsigned kOracleIndexHardCap = 12;
// AGTAUT_ORACLE_CAP if set (clamped to the hard cap), else the default.
unsigned oracle_cap();

// g = 1 only: counts SL_2(Z/d^2) and its elements of the shape
// [[1 mod d, 0 mod d^2], [*, 1 mod d]], returns the quotient.
// 2 <= d <= oracle_cap().
DegreeResult oracle_index(std::uint64_t d);

// Brute-force |Sp_2g(Z/N)| over all 2g x 2g matrices; N^{4g^2} <= 2^24.
BigInt enumerate_sp_order(unsigned g, std::uint64_t N);

}  // namespace agtaut
