#include "agtaut/nl_expression.hpp"

#include "agtaut/format.hpp"
#include "agtaut/nl_cycles.hpp"

#include <cctype>
#include <stdexcept>

namespace agtaut {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

std::string join(std::vector<unsigned> const& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(xs[i]);
  }
  return out;
}

void validate(unsigned g, CycleSymbol const& s) {
  std::visit(Overload{
                 [g](NlSymbol const& x) {
                   if (2 * x.delta.length() > g) {
                     throw std::invalid_argument("NL(" + x.delta.str() + ") needs length <= g/2");
                   }
                 },
                 [](NlTildeSymbol const&) {},
                 [g](ProductCycleSymbol const& x) {
                   if (x.u < 1 || 2 * x.u > g) {
                     throw std::invalid_argument("P(" + std::to_string(x.u) +
                                                 ") needs 1 <= u <= g/2");
                   }
                 },
                 [g](LambdaSymbol const& x) {
                   if (x.indices.empty()) {
                     throw std::invalid_argument("L() needs at least one index");
                   }
                   for (auto i : x.indices) {
                     if (i < 1 || i > g) {
                       throw std::invalid_argument("L(" + join(x.indices) +
                                                   "): indices must lie in [1, g]");
                     }
                   }
                 },
             },
             s);
}

class Parser {
 public:
  Parser(unsigned g, std::string_view text) : g_(g), text_(text) {}

  std::vector<NlTerm> parse() {
    std::vector<NlTerm> terms;
    skip_space();
    bool negative = consume('-');
    if (!negative) {
      consume('+');
    }
    while (true) {
      NlTerm t = term();
      if (negative) {
        t.coeff = -t.coeff;
      }
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) {
        break;
      }
      if (consume('+')) {
        negative = false;
      } else if (consume('-')) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return terms;
  }

 private:
  NlTerm term() {
    NlTerm t{Rational(1), {}};
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = coefficient();
      skip_space();
      if (!consume('*')) {
        return t;
      }
    }
    t.factors.push_back(factor());
    while (true) {
      skip_space();
      if (!consume('*')) {
        break;
      }
      t.factors.push_back(factor());
    }
    return t;
  }

  Rational coefficient() {
    std::string num = digits();
    skip_space();
    if (consume('/')) {
      skip_space();
      return Rational::parse(num + "/" + digits());
    }
    return Rational::parse(num);
  }

  CycleSymbol factor() {
    skip_space();
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      name.push_back(text_[pos_++]);
    }
    skip_space();
    if (!consume('(')) {
      fail("expected '(' after symbol name");
    }
    std::vector<std::uint64_t> args;
    while (true) {
      skip_space();
      std::string arg = digits();
      if (arg.size() > 18) {
        fail("argument too large");
      }
      args.push_back(std::stoull(arg));
      skip_space();
      if (consume(')')) {
        break;
      }
      if (!consume(',')) {
        fail("expected ',' or ')'");
      }
    }
    if (name == "NL") {
      return NlSymbol{PolarizationType(args)};
    }
    if (name == "NLt" || name == "P") {
      if (args.size() != 1) {
        fail(name + " takes exactly one argument");
      }
      if (name == "NLt") {
        return NlTildeSymbol{args[0]};
      }
      if (args[0] > g_) {
        fail("P(u) needs u <= g/2");
      }
      return ProductCycleSymbol{static_cast<unsigned>(args[0])};
    }
    if (name == "L") {
      std::vector<unsigned> idx;
      for (auto a : args) {
        if (a > g_) {
          fail("lambda index " + std::to_string(a) + " exceeds g");
        }
        idx.push_back(static_cast<unsigned>(a));
      }
      return LambdaSymbol{std::move(idx)};
    }
    fail("unknown symbol '" + name + "' (expected NL, NLt, P or L)");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out.push_back(text_[pos_++]);
    }
    if (out.empty()) {
      fail("expected a number");
    }
    return out;
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  [[noreturn]] void fail(std::string const& what) const {
    throw std::invalid_argument("cannot parse expression at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  unsigned g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

TautClass project_symbol(unsigned g, CycleSymbol const& s) {
  return std::visit(Overload{
                        [g](NlSymbol const& x) { return taut_nl(g, x.delta); },
                        [g](NlTildeSymbol const& x) { return taut_nl_tilde(g, x.d); },
                        [g](ProductCycleSymbol const& x) { return taut_product_cycle(g, x.u); },
                        [g](LambdaSymbol const& x) {
                          LambdaPolynomial p = LambdaPolynomial::product_of(g, x.indices);
                          return reduce(p);
                        },
                    },
                    s);
}

}  // namespace

bool is_nl_type(CycleSymbol const& s) { return !std::holds_alternative<LambdaSymbol>(s); }

std::string symbol_str(CycleSymbol const& s) {
  return std::visit(Overload{
                        [](NlSymbol const& x) { return "NL(" + x.delta.str() + ")"; },
                        [](NlTildeSymbol const& x) { return "NLt(" + std::to_string(x.d) + ")"; },
                        [](ProductCycleSymbol const& x) {
                          return "P(" + std::to_string(x.u) + ")";
                        },
                        [](LambdaSymbol const& x) { return "L(" + join(x.indices) + ")"; },
                    },
                    s);
}

NLExpression::NLExpression(unsigned g, std::vector<NlTerm> terms) : g_(g), terms_(std::move(terms)) {
  if (g_ < 1 || g_ > kMaxGenus) {
    throw std::invalid_argument("expression genus must lie in [1, " + std::to_string(kMaxGenus) +
                                "]");
  }
  for (auto const& t : terms_) {
    for (auto const& s : t.factors) {
      validate(g_, s);
    }
  }
}

NLExpression NLExpression::parse(unsigned g, std::string_view text) {
  return NLExpression(g, Parser(g, text).parse());
}

std::string NLExpression::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (auto const& t : terms_) {
    std::string label;
    for (auto const& s : t.factors) {
      label += (label.empty() ? "" : " * ") + symbol_str(s);
    }
    parts.emplace_back(t.coeff, label);
  }
  return format_terms(parts, " * ");
}

TautClass taut_projection(NLExpression const& e) {
  unsigned const g = e.genus();
  TautClass total(g);
  for (auto const& t : e.terms()) {
    std::size_t nl_count = 0;
    for (auto const& s : t.factors) {
      nl_count += is_nl_type(s) ? 1 : 0;
    }
    if (nl_count >= 3) {
      throw OutOfScopeError("projection of a product of " + std::to_string(nl_count) +
                            " NL-type cycles is not supported (only pairwise vanishing is known)");
    }
    if (nl_count == 2) {
      continue;
    }
    TautClass value = TautClass::one(g);
    for (auto const& s : t.factors) {
      value = multiply(value, project_symbol(g, s));
    }
    total += t.coeff * value;
  }
  return total;
}

}  // namespace agtaut
