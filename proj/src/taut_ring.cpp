#include "agtaut/taut_ring.hpp"

#include "agtaut/format.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>

namespace agtaut {

std::string format_terms(std::vector<std::pair<Rational, std::string>> const& terms,
                         std::string const& separator) {
  std::ostringstream os;
  bool first = true;
  for (auto const& [c, label] : terms) {
    if (c.is_zero()) {
      continue;
    }
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) {
        os << '-';
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (label.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << label;
    } else {
      os << mag << separator << label;
    }
    first = false;
  }
  return first ? std::string("0") : os.str();
}

namespace {

void check_genus(unsigned g) {
  if (g == 0 || g > kMaxGenus) {
    throw std::invalid_argument("genus must lie in [1, " + std::to_string(kMaxGenus) + "], got " +
                                std::to_string(g));
  }
}

std::string index_label(std::vector<unsigned> const& indices) {
  std::string out = "L(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out += (i ? "," : "") + std::to_string(indices[i]);
  }
  return out + ")";
}

}  // namespace

unsigned weight(Exponents const& e) {
  unsigned w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    w += static_cast<unsigned>(i + 1) * e[i];
  }
  return w;
}

unsigned set_degree(IndexSet s) {
  unsigned d = 0;
  for (unsigned i = 1; s != 0; ++i, s >>= 1) {
    if (s & 1U) {
      d += i;
    }
  }
  return d;
}

std::vector<unsigned> set_indices(IndexSet s) {
  std::vector<unsigned> out;
  for (unsigned i = 1; s != 0; ++i, s >>= 1) {
    if (s & 1U) {
      out.push_back(i);
    }
  }
  return out;
}

IndexSet make_set(std::vector<unsigned> const& indices) {
  IndexSet s = 0;
  unsigned prev = 0;
  for (unsigned i : indices) {
    if (i <= prev || i > kMaxGenus) {
      throw std::invalid_argument("index set must be strictly increasing positive integers");
    }
    s |= IndexSet{1} << (i - 1);
    prev = i;
  }
  return s;
}

// ---------------------------------------------------------------- polynomials

LambdaPolynomial::LambdaPolynomial(unsigned g) : g_(g) { check_genus(g); }

LambdaPolynomial LambdaPolynomial::constant(unsigned g, Rational c) {
  LambdaPolynomial p(g);
  p.add_term(Exponents(g, 0), c);
  return p;
}

LambdaPolynomial LambdaPolynomial::lambda(unsigned g, unsigned i) {
  return product_of(g, {i});
}

LambdaPolynomial LambdaPolynomial::monomial(unsigned g, Exponents e, Rational c) {
  LambdaPolynomial p(g);
  p.add_term(e, c);
  return p;
}

LambdaPolynomial LambdaPolynomial::product_of(unsigned g, std::vector<unsigned> const& factors,
                                              Rational c) {
  Exponents e(g, 0);
  for (unsigned i : factors) {
    if (i > g) {
      throw std::invalid_argument("lambda_" + std::to_string(i) + " does not exist in genus " +
                                  std::to_string(g));
    }
    if (i > 0) {
      ++e[i - 1];
    }
  }
  return monomial(g, std::move(e), std::move(c));
}

void LambdaPolynomial::check_exponents(Exponents const& e) const {
  if (e.size() != g_) {
    throw std::invalid_argument("exponent vector length must equal the genus");
  }
}

void LambdaPolynomial::add_term(Exponents const& e, Rational const& c) {
  check_exponents(e);
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

std::optional<unsigned> LambdaPolynomial::homogeneous_weight() const {
  std::optional<unsigned> w;
  for (auto const& [e, c] : terms_) {
    unsigned we = weight(e);
    if (w && *w != we) {
      return std::nullopt;
    }
    w = we;
  }
  return w.value_or(0);
}

LambdaPolynomial LambdaPolynomial::homogeneous_part(unsigned w) const {
  LambdaPolynomial out(g_);
  for (auto const& [e, c] : terms_) {
    if (weight(e) == w) {
      out.terms_.emplace(e, c);
    }
  }
  return out;
}

LambdaPolynomial& LambdaPolynomial::operator+=(LambdaPolynomial const& rhs) {
  if (rhs.g_ != g_) {
    throw std::invalid_argument("genus mismatch in polynomial sum");
  }
  for (auto const& [e, c] : rhs.terms_) {
    add_term(e, c);
  }
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator-=(LambdaPolynomial const& rhs) {
  if (rhs.g_ != g_) {
    throw std::invalid_argument("genus mismatch in polynomial difference");
  }
  for (auto const& [e, c] : rhs.terms_) {
    add_term(e, -c);
  }
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator*=(Rational const& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

LambdaPolynomial operator*(LambdaPolynomial const& a, LambdaPolynomial const& b) {
  if (a.g_ != b.g_) {
    throw std::invalid_argument("genus mismatch in polynomial product");
  }
  LambdaPolynomial out(a.g_);
  for (auto const& [ea, ca] : a.terms_) {
    for (auto const& [eb, cb] : b.terms_) {
      Exponents e(a.g_);
      for (unsigned i = 0; i < a.g_; ++i) {
        e[i] = ea[i] + eb[i];
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string LambdaPolynomial::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (auto const& [e, c] : terms_) {
    std::vector<unsigned> factors;
    for (unsigned i = 0; i < g_; ++i) {
      factors.insert(factors.end(), e[i], i + 1);
    }
    parts.emplace_back(c, factors.empty() ? std::string() : index_label(factors));
  }
  return format_terms(parts, " * ");
}

// ---------------------------------------------------------------- classes

TautClass::TautClass(unsigned g) : g_(g) { check_genus(g); }

TautClass TautClass::one(unsigned g) { return from_set(g, IndexSet{0}); }

TautClass TautClass::basis(unsigned g, std::vector<unsigned> const& indices, Rational c) {
  return from_set(g, make_set(indices), std::move(c));
}

TautClass TautClass::from_set(unsigned g, IndexSet s, Rational c) {
  TautClass t(g);
  t.add_term(s, c);
  return t;
}

Rational TautClass::coefficient(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> TautClass::degree() const {
  std::optional<unsigned> d;
  for (auto const& [s, c] : terms_) {
    unsigned ds = set_degree(s);
    if (d && *d != ds) {
      return std::nullopt;
    }
    d = ds;
  }
  return d.value_or(0);
}

void TautClass::add_term(IndexSet s, Rational const& c) {
  if ((s & ~socle_set(g_)) != 0) {
    throw std::invalid_argument("basis index out of range [1, g-1] for genus " + std::to_string(g_));
  }
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

TautClass& TautClass::operator+=(TautClass const& rhs) {
  if (rhs.g_ != g_) {
    throw std::invalid_argument("genus mismatch in class sum");
  }
  for (auto const& [s, c] : rhs.terms_) {
    add_term(s, c);
  }
  return *this;
}

TautClass& TautClass::operator-=(TautClass const& rhs) {
  if (rhs.g_ != g_) {
    throw std::invalid_argument("genus mismatch in class difference");
  }
  for (auto const& [s, c] : rhs.terms_) {
    add_term(s, -c);
  }
  return *this;
}

TautClass& TautClass::operator*=(Rational const& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

std::string TautClass::str() const {
  std::vector<std::pair<IndexSet, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](auto const& a, auto const& b) {
    unsigned da = set_degree(a.first), db = set_degree(b.first);
    if (da != db) {
      return da < db;
    }
    return set_indices(a.first) < set_indices(b.first);
  });
  std::vector<std::pair<Rational, std::string>> parts;
  for (auto const& [s, c] : ordered) {
    parts.emplace_back(c, s == 0 ? std::string() : index_label(set_indices(s)));
  }
  return format_terms(parts, " * ");
}

// ---------------------------------------------------------------- ring

LambdaPolynomial relation(unsigned k, unsigned g) {
  if (k < 1 || k + 1 > g) {
    throw std::invalid_argument("relation index k must lie in [1, g-1]");
  }
  LambdaPolynomial r = LambdaPolynomial::product_of(g, {k, k});
  unsigned top = std::min(k, g - 1 - k);
  for (unsigned m = 1; m <= top; ++m) {
    Rational c = (m % 2 == 1) ? Rational(-2) : Rational(2);
    r += LambdaPolynomial::product_of(g, {k - m, k + m}, c);
  }
  return r;
}

LambdaPolynomial chern_product(unsigned g) {
  LambdaPolynomial total(g), dual(g);
  for (unsigned i = 0; i <= g; ++i) {
    total += LambdaPolynomial::lambda(g, i);
    dual += LambdaPolynomial::product_of(g, {i}, i % 2 == 0 ? Rational(1) : Rational(-1));
  }
  return total * dual;
}

namespace {

class Rewriter {
 public:
  explicit Rewriter(unsigned g) : g_(g) {}

  TautClass const& reduce_monomial(Exponents const& e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) {
      return it->second;
    }
    TautClass out = compute(e);
    return memo_.emplace(e, std::move(out)).first->second;
  }

 private:
  TautClass compute(Exponents const& e) {
    TautClass out(g_);
    if (e[g_ - 1] > 0) {
      return out;  // lambda_g = 0
    }
    unsigned k = 0;
    for (unsigned i = 1; i < g_; ++i) {
      if (e[i - 1] >= 2) {
        k = i;
        break;
      }
    }
    if (k == 0) {
      IndexSet s = 0;
      for (unsigned i = 1; i < g_; ++i) {
        if (e[i - 1] == 1) {
          s |= IndexSet{1} << (i - 1);
        }
      }
      out.add_term(s, 1);
      return out;
    }
    // lambda_k^2 = 2 sum_m (-1)^{m+1} lambda_{k-m} lambda_{k+m}
    Exponents rest = e;
    rest[k - 1] -= 2;
    unsigned top = std::min(k, g_ - 1 - k);
    for (unsigned m = 1; m <= top; ++m) {
      Exponents next = rest;
      if (k > m) {
        ++next[k - m - 1];
      }
      ++next[k + m - 1];
      Rational c = (m % 2 == 1) ? Rational(2) : Rational(-2);
      TautClass part = reduce_monomial(next);
      out += part * c;
    }
    return out;
  }

  unsigned g_;
  std::map<Exponents, TautClass> memo_;
};

}  // namespace

TautClass reduce(LambdaPolynomial const& p) {
  unsigned g = p.genus();
  Rewriter rw(g);
  TautClass out(g);
  for (auto const& [e, c] : p.terms()) {
    out += rw.reduce_monomial(e) * c;
  }
  return out;
}

TautClass multiply(TautClass const& a, TautClass const& b) {
  if (a.genus() != b.genus()) {
    throw std::invalid_argument("genus mismatch in multiply: " + std::to_string(a.genus()) +
                                " vs " + std::to_string(b.genus()));
  }
  unsigned g = a.genus();
  Rewriter rw(g);
  TautClass out(g);
  for (auto const& [sa, ca] : a.terms()) {
    for (auto const& [sb, cb] : b.terms()) {
      Exponents e(g, 0);
      for (unsigned i = 1; i < g; ++i) {
        IndexSet bit = IndexSet{1} << (i - 1);
        e[i - 1] = ((sa & bit) ? 1U : 0U) + ((sb & bit) ? 1U : 0U);
      }
      out += rw.reduce_monomial(e) * (ca * cb);
    }
  }
  return out;
}

TautClass lambda_class(unsigned g, unsigned i) { return reduce(LambdaPolynomial::lambda(g, i)); }

std::vector<IndexSet> graded_basis(unsigned g, unsigned k) {
  check_genus(g);
  std::vector<IndexSet> out;
  IndexSet full = socle_set(g);
  for (IndexSet s = 0;; ++s) {
    if ((s & ~full) == 0 && set_degree(s) == k) {
      out.push_back(s);
    }
    if (s == full) {
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](IndexSet a, IndexSet b) { return set_indices(a) < set_indices(b); });
  return out;
}

std::uint64_t graded_dimension(unsigned g, unsigned k) {
  check_genus(g);
  // count[j] = number of subsets of the processed indices with sum j
  std::vector<std::uint64_t> count(socle_degree(g) + 1, 0);
  count[0] = 1;
  for (unsigned i = 1; i < g; ++i) {
    for (unsigned j = socle_degree(g); j >= i; --j) {
      count[j] += count[j - i];
    }
  }
  return k < count.size() ? count[k] : 0;
}

Rational socle_pair(TautClass const& a, TautClass const& b) {
  return multiply(a, b).coefficient(socle_set(a.genus()));
}

PairingMatrix pairing_matrix(unsigned g, unsigned k) {
  if (k > socle_degree(g)) {
    throw std::invalid_argument("pairing degree exceeds the socle degree C(g,2)");
  }
  PairingMatrix pm{g, k, graded_basis(g, k), {}, {}};
  IndexSet full = socle_set(g);
  for (IndexSet s : pm.row_basis) {
    pm.column_basis.push_back(full & ~s);
  }
  if (pm.column_basis.size() != graded_dimension(g, socle_degree(g) - k)) {
    throw std::logic_error("complementary graded dimensions differ");
  }
  std::size_t n = pm.row_basis.size();
  pm.entries = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pm.entries(i, j) =
          socle_pair(TautClass::from_set(g, pm.row_basis[i]), TautClass::from_set(g, pm.column_basis[j]));
    }
  }
  return pm;
}

}  // namespace agtaut
