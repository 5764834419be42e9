#pragma once

// Formal Q-linear combinations of cycle symbols and their tautological
// projection.
//
// Text grammar (whitespace ignored):
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := [coeff "*"] factor ("*" factor)* | coeff
//   coeff  := int ["/" int]
//   factor := "NL(" d1,..,du ")" | "NLt(" d ")" | "P(" u ")" | "L(" i,.. ")"

#include "agtaut/polarization.hpp"
#include "agtaut/rational.hpp"
#include "agtaut/taut_ring.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace agtaut {

struct NlSymbol {
  PolarizationType delta;
  friend bool operator==(NlSymbol const&, NlSymbol const&) = default;
};
struct NlTildeSymbol {
  std::uint64_t d;
  friend bool operator==(NlTildeSymbol const&, NlTildeSymbol const&) = default;
};
struct ProductCycleSymbol {
  unsigned u;
  friend bool operator==(ProductCycleSymbol const&, ProductCycleSymbol const&) = default;
};
// prod lambda_i over the listed indices; repeats allowed, each in [1, g].
struct LambdaSymbol {
  std::vector<unsigned> indices;
  friend bool operator==(LambdaSymbol const&, LambdaSymbol const&) = default;
};

using CycleSymbol = std::variant<NlSymbol, NlTildeSymbol, ProductCycleSymbol, LambdaSymbol>;

// NL, NLt and P are supported on the Noether-Lefschetz locus.
bool is_nl_type(CycleSymbol const& s);
std::string symbol_str(CycleSymbol const& s);

struct NlTerm {
  Rational coeff;
  std::vector<CycleSymbol> factors;  // empty: constant term
  friend bool operator==(NlTerm const&, NlTerm const&) = default;
};

class NLExpression {
 public:
  // Validates every symbol against g: NL length <= g/2, 1 <= u <= g/2,
  // lambda indices in [1, g].
  NLExpression(unsigned g, std::vector<NlTerm> terms);

  static NLExpression parse(unsigned g, std::string_view text);

  unsigned genus() const { return g_; }
  std::vector<NlTerm> const& terms() const { return terms_; }

  std::string str() const;

 private:
  unsigned g_;
  std::vector<NlTerm> terms_;
};

// Linear in the terms.  Within a term, lambda factors multiply through in
// the ring; one NL-type factor projects by its closed formula; two NL-type
// factors project to 0; three or more throw OutOfScopeError.
TautClass taut_projection(NLExpression const& e);

}  // namespace agtaut
