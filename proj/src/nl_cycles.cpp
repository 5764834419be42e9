#include "agtaut/nl_cycles.hpp"

#include "agtaut/arith.hpp"
#include "agtaut/isogeny.hpp"

#include <string>

namespace agtaut {

namespace {

void require_genus(unsigned g, unsigned minimum, char const* what) {
  if (g < minimum || g > kMaxGenus) {
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(minimum) +
                                " <= g <= " + std::to_string(kMaxGenus));
  }
}

Rational one_minus_power(std::uint64_t p, long exponent) {
  return Rational(1) - Rational(p).pow(exponent);
}

}  // namespace

TautClass taut_product_cycle(unsigned g, unsigned u) {
  if (u != 1 && u != 2) {
    throw OutOfScopeError("product-locus projection is only available for u = 1, 2 (got u = " +
                          std::to_string(u) + ")");
  }
  require_genus(g, 2 * u, "taut_product_cycle");
  if (u == 1) {
    Rational c = Rational(g) / (Rational(6) * abs_bernoulli(2 * g));
    return TautClass::basis(g, {g - 1}, c);
  }
  if (g < 4) {
    throw std::invalid_argument("taut_product_cycle(u = 2) needs g >= 4");
  }
  Rational c = Rational(g) * Rational(g - 1) /
               (Rational(360) * abs_bernoulli(2 * g) * abs_bernoulli(2 * g - 2));
  return TautClass::basis(g, {g - 3, g - 1}, c);
}

Rational nl_constant(unsigned g, PolarizationType const& delta) {
  unsigned const u = delta.length();
  if (2 * u > g) {
    throw std::invalid_argument("polarization type " + delta.str() + " has length " +
                                std::to_string(u) + " > g/2 for g = " + std::to_string(g));
  }
  Rational c(1);
  for (unsigned k = 1; k <= u; ++k) {
    c *= Rational(delta[k - 1]).pow(2L * u - 4L * k + 2);
  }
  for (unsigned i = 1; i <= u; ++i) {
    for (unsigned j = i + 1; j <= u; ++j) {
      long const gap = static_cast<long>(j - i);
      for (auto p : factorize(delta[j - 1] / delta[i - 1]).primes()) {
        c *= one_minus_power(p, -2 * gap) / one_minus_power(p, -2 * (gap + 1));
      }
    }
  }
  c *= Rational(delta.product()).pow(2L * (g - u) + 1);
  for (unsigned j = 1; j <= u; ++j) {
    for (auto p : factorize(delta[j - 1]).primes()) {
      c *= one_minus_power(p, -2L * (static_cast<long>(j + g) - 2L * u));
    }
  }
  return c;
}

TautClass taut_nl(unsigned g, PolarizationType const& delta) {
  Rational c = nl_constant(g, delta);
  return c * taut_product_cycle(g, delta.length());
}

TautClass taut_nl_d_special(unsigned g, std::uint64_t d) {
  require_genus(g, 2, "taut_nl_d_special");
  if (d == 0) {
    throw std::invalid_argument("taut_nl_d_special needs d >= 1");
  }
  Rational c = Rational(g) * Rational(d).pow(2L * g - 1) / (Rational(6) * abs_bernoulli(2 * g));
  for (auto p : factorize(d).primes()) {
    c *= one_minus_power(p, 2L - 2L * g);
  }
  return TautClass::basis(g, {g - 1}, c);
}

TautClass taut_nl_pair_special(unsigned g, std::uint64_t d1, std::uint64_t d2) {
  require_genus(g, 4, "taut_nl_pair_special");
  PolarizationType chain({d1, d2});
  Rational c = Rational(g) * Rational(g - 1) * Rational(d1).pow(2L * g - 1) *
               Rational(d2).pow(2L * g - 5) /
               (Rational(360) * abs_bernoulli(2 * g) * abs_bernoulli(2 * g - 2));
  for (auto p : factorize(chain[0]).primes()) {
    c *= one_minus_power(p, 6L - 2L * g);
  }
  for (auto p : factorize(chain[1]).primes()) {
    c *= one_minus_power(p, 4L - 2L * g);
  }
  for (auto p : factorize(d2 / d1).primes()) {
    c *= one_minus_power(p, -2) / one_minus_power(p, -4);
  }
  return TautClass::basis(g, {g - 3, g - 1}, c);
}

Matrix tilde_to_plain(unsigned D) {
  if (D == 0) {
    throw std::invalid_argument("basis change needs D >= 1");
  }
  Matrix m(D, D);
  for (unsigned d = 1; d <= D; ++d) {
    for (auto e : divisors(d)) {
      m(d - 1, e - 1) = sigma(1, d / e);
    }
  }
  return m;
}

Matrix plain_to_tilde(unsigned D) {
  Matrix t = tilde_to_plain(D);
  // Solve t * x = e_c column by column; t is unit lower triangular.
  Matrix inv(D, D);
  for (unsigned c = 0; c < D; ++c) {
    for (unsigned r = c; r < D; ++r) {
      Rational acc = (r == c) ? Rational(1) : Rational(0);
      for (unsigned k = c; k < r; ++k) {
        if (!t(r, k).is_zero()) {
          acc -= t(r, k) * inv(k, c);
        }
      }
      inv(r, c) = acc / t(r, r);
    }
  }
  return inv;
}

TautClass taut_nl_tilde_divisor_route(unsigned g, std::uint64_t d) {
  TautClass out(g);
  for (auto e : divisors(d)) {
    out += sigma(1, d / e) * taut_nl_d_special(g, e);
  }
  return out;
}

TautClass taut_nl_tilde_closed_form(unsigned g, std::uint64_t d) {
  require_genus(g, 2, "taut_nl_tilde");
  Rational c = Rational(g) * sigma(static_cast<int>(2 * g - 1), d) /
               (Rational(6) * abs_bernoulli(2 * g));
  return TautClass::basis(g, {g - 1}, c);
}

TautClass taut_nl_tilde(unsigned g, std::uint64_t d) {
  require_genus(g, 2, "taut_nl_tilde");
  if (d == 0) {
    Rational c = Rational(g % 2 == 0 ? 1 : -1) / Rational(24);
    return TautClass::basis(g, {g - 1}, c);
  }
  TautClass divisor_route = taut_nl_tilde_divisor_route(g, d);
  TautClass closed = taut_nl_tilde_closed_form(g, d);
  if (divisor_route != closed) {
    throw std::logic_error("NLt(" + std::to_string(d) + ") routes disagree for g = " +
                           std::to_string(g) + ": " + divisor_route.str() + " vs " + closed.str());
  }
  return closed;
}

QSeries eisenstein_series(unsigned g, unsigned D) {
  require_genus(g, 2, "eisenstein_series");
  QSeries e(D);
  e[0] = 1;
  Rational scale = Rational(4 * g) / bernoulli(2 * g);
  for (unsigned n = 1; n <= D; ++n) {
    e[n] = -scale * sigma(static_cast<int>(2 * g - 1), n);
  }
  return e;
}

NlCompositionDiagnostic diagnose_nl_composition(unsigned g, PolarizationType const& delta) {
  unsigned const u = delta.length();
  Rational displayed = nl_constant(g, delta);
  Rational composed = deg_phi(u, delta).value * deg_phi(g - u, delta.complementary(g)).value /
                      deg_pi(u, delta).value;
  return {displayed, composed};
}

}  // namespace agtaut
