#pragma once

// The tautological ring R*(A_g) = Q[lambda_1..lambda_g] / (c(E)c(E^v) - 1, lambda_g).
//
// Elements are kept in the square-free normal form: the monomials
// lambda_S = prod_{i in S} lambda_i for S a subset of {1, .., g-1} form an
// additive basis.  The ring is Gorenstein with one-dimensional socle in
// degree C(g,2), spanned by lambda_1 lambda_2 ... lambda_{g-1}.
//
// Pairing normalization: socle_pair() returns the coefficient of the socle
// monomial in a product.  It is proportional to the geometric lambda_g
// pairing, which is enough for every perfection statement made here.

#include "agtaut/linalg.hpp"
#include "agtaut/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace agtaut {

// Index sets are bitmasks: bit (i - 1) set <=> lambda_i is a factor.
using IndexSet = std::uint32_t;

inline constexpr unsigned kMaxGenus = 24;

// Exponent vector (e_1, .., e_g); entry i - 1 is the power of lambda_i.
using Exponents = std::vector<unsigned>;

unsigned weight(Exponents const& e);
unsigned set_degree(IndexSet s);
std::vector<unsigned> set_indices(IndexSet s);
// Indices must be strictly increasing and positive.
IndexSet make_set(std::vector<unsigned> const& indices);
inline unsigned socle_degree(unsigned g) { return g * (g - 1) / 2; }
inline IndexSet socle_set(unsigned g) { return g <= 1 ? 0 : (IndexSet{1} << (g - 1)) - 1; }

// Polynomial in lambda_1..lambda_g with rational coefficients.
class LambdaPolynomial {
 public:
  explicit LambdaPolynomial(unsigned g);

  static LambdaPolynomial constant(unsigned g, Rational c);
  // lambda_0 = 1.  Rejects i > g: such generators do not exist.
  static LambdaPolynomial lambda(unsigned g, unsigned i);
  static LambdaPolynomial monomial(unsigned g, Exponents e, Rational c = 1);
  // prod lambda_{i} over the listed factors (repeats allowed, 0 allowed).
  static LambdaPolynomial product_of(unsigned g, std::vector<unsigned> const& factors,
                                     Rational c = 1);

  unsigned genus() const { return g_; }
  std::map<Exponents, Rational> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // The common weight of all terms; nullopt for a mixed-weight polynomial.
  // The zero polynomial reports weight 0.
  std::optional<unsigned> homogeneous_weight() const;
  LambdaPolynomial homogeneous_part(unsigned w) const;

  void add_term(Exponents const& e, Rational const& c);

  LambdaPolynomial& operator+=(LambdaPolynomial const& rhs);
  LambdaPolynomial& operator-=(LambdaPolynomial const& rhs);
  LambdaPolynomial& operator*=(Rational const& c);
  friend LambdaPolynomial operator+(LambdaPolynomial a, LambdaPolynomial const& b) { return a += b; }
  friend LambdaPolynomial operator-(LambdaPolynomial a, LambdaPolynomial const& b) { return a -= b; }
  friend LambdaPolynomial operator*(LambdaPolynomial a, Rational const& c) { return a *= c; }
  friend LambdaPolynomial operator*(Rational const& c, LambdaPolynomial a) { return a *= c; }
  friend LambdaPolynomial operator*(LambdaPolynomial const& a, LambdaPolynomial const& b);
  friend bool operator==(LambdaPolynomial const&, LambdaPolynomial const&) = default;

  std::string str() const;

 private:
  void check_exponents(Exponents const& e) const;

  unsigned g_;
  std::map<Exponents, Rational> terms_;
};

class TautClass {
 public:
  explicit TautClass(unsigned g);

  static TautClass one(unsigned g);
  // c * lambda_S; indices strictly increasing in [1, g-1].
  static TautClass basis(unsigned g, std::vector<unsigned> const& indices, Rational c = 1);
  static TautClass from_set(unsigned g, IndexSet s, Rational c = 1);

  unsigned genus() const { return g_; }
  std::map<IndexSet, Rational> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(IndexSet s) const;
  std::optional<unsigned> degree() const;

  void add_term(IndexSet s, Rational const& c);

  TautClass& operator+=(TautClass const& rhs);
  TautClass& operator-=(TautClass const& rhs);
  TautClass& operator*=(Rational const& c);
  friend TautClass operator+(TautClass a, TautClass const& b) { return a += b; }
  friend TautClass operator-(TautClass a, TautClass const& b) { return a -= b; }
  friend TautClass operator*(TautClass a, Rational const& c) { return a *= c; }
  friend TautClass operator*(Rational const& c, TautClass a) { return a *= c; }
  friend bool operator==(TautClass const&, TautClass const&) = default;

  // Terms ordered by degree, then lexicographically: "60 * L(1)",
  // "2 * L(1,2) - L(3)", "0".
  std::string str() const;

 private:
  unsigned g_;
  std::map<IndexSet, Rational> terms_;
};

// Degree-2k generator of the ideal, normalized to lead with lambda_k^2:
//   lambda_k^2 - 2 sum_{m=1}^{min(k, g-1-k)} (-1)^{m+1} lambda_{k-m} lambda_{k+m}
// with lambda_0 = 1 and every term involving lambda_{>= g} dropped.
LambdaPolynomial relation(unsigned k, unsigned g);

// c(E) c(E^v) = (sum_i lambda_i)(sum_i (-1)^i lambda_i), i = 0..g.
LambdaPolynomial chern_product(unsigned g);

// Square-free normal form by rewriting.  Squared factors are eliminated
// smallest index first.
TautClass reduce(LambdaPolynomial const& p);

TautClass multiply(TautClass const& a, TautClass const& b);

// lambda_i as a class (lambda_g reduces to zero).
TautClass lambda_class(unsigned g, unsigned i);

std::uint64_t graded_dimension(unsigned g, unsigned k);
// Degree-k basis sets in lexicographic order of their index lists.
std::vector<IndexSet> graded_basis(unsigned g, unsigned k);

Rational socle_pair(TautClass const& a, TautClass const& b);

struct PairingMatrix {
  unsigned g;
  unsigned k;
  std::vector<IndexSet> row_basis;     // degree k
  std::vector<IndexSet> column_basis;  // degree C(g,2) - k, complements of row_basis
  Matrix entries;

  bool is_nonsingular() const { return entries.determinant() != 0; }
};

PairingMatrix pairing_matrix(unsigned g, unsigned k);

}  // namespace agtaut
