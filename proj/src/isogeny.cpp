#include "agtaut/isogeny.hpp"

#include "agtaut/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace agtaut {

std::string_view route_name(DegreeRoute route) {
  switch (route) {
    case DegreeRoute::closed_form:
      return "closed_form";
    case DegreeRoute::stratified:
      return "stratified";
    case DegreeRoute::enumeration:
      return "enumeration";
  }
  return "unknown";
}

DegreeRoute parse_route(std::string_view name) {
  if (name == "closed_form") {
    return DegreeRoute::closed_form;
  }
  if (name == "stratified") {
    return DegreeRoute::stratified;
  }
  if (name == "enumeration") {
    return DegreeRoute::enumeration;
  }
  throw std::invalid_argument("unknown route '" + std::string(name) +
                              "' (expected closed_form, stratified or enumeration)");
}

// ---------------------------------------------------------------- shapes

ScaledMatrixShape::ScaledMatrixShape(unsigned g, std::vector<unsigned> valuations)
    : g_(g), v_(std::move(valuations)) {
  if (v_.size() != g_) {
    throw std::invalid_argument("shape needs exactly g valuations");
  }
  if (!std::is_sorted(v_.begin(), v_.end())) {
    throw std::invalid_argument("shape valuations must be non-decreasing");
  }
}

ScaledMatrixShape ScaledMatrixShape::from_type(unsigned g, PolarizationType const& delta,
                                               std::uint64_t p) {
  auto padded = delta.padded(g);
  std::vector<unsigned> v;
  for (auto d : padded.entries()) {
    v.push_back(factorize(d).valuation(p));
  }
  return ScaledMatrixShape(g, std::move(v));
}

unsigned ScaledMatrixShape::h() const {
  return static_cast<unsigned>(std::count_if(v_.begin(), v_.end(), [](unsigned x) { return x > 0; }));
}

unsigned ScaledMatrixShape::max_valuation() const { return v_.empty() ? 0 : v_.back(); }

unsigned ScaledMatrixShape::valuation_sum() const {
  return std::accumulate(v_.begin(), v_.end(), 0U);
}

unsigned ScaledMatrixShape::forced_count(unsigned i) const {
  unsigned n = 0;
  for (unsigned r = 0; r < g_; ++r) {
    for (unsigned c = 0; c < g_; ++c) {
      if (a_exponent(r, c) >= i) {
        ++n;
      }
      if (r <= c && b_exponent(r, c) >= i) {
        ++n;
      }
    }
  }
  return n;
}

unsigned ScaledMatrixShape::total_forced() const {
  unsigned total = 0;
  for (unsigned i = 1; i <= 2 * max_valuation(); ++i) {
    total += forced_count(i);
  }
  return total;
}

// ---------------------------------------------------------------- group orders

namespace {

BigInt big(std::uint64_t n) { return BigInt(std::to_string(n), 10); }

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
}

Rational checked_integer(Rational value, char const* what) {
  if (!value.is_integer() || value.sign() <= 0) {
    throw std::logic_error(std::string(what) + " is not a positive integer: " + value.str());
  }
  return value;
}

}  // namespace

BigInt sp_order_prime(unsigned g, std::uint64_t p) {
  check_prime(p);
  BigInt bp = big(p);
  BigInt out = ipow(bp, static_cast<unsigned long>(g) * g);
  for (unsigned i = 1; i <= g; ++i) {
    out *= ipow(bp, 2UL * i) - 1;
  }
  return out;
}

BigInt sp_order(unsigned g, std::uint64_t N) {
  if (N == 0) {
    throw std::invalid_argument("sp_order: N must be positive");
  }
  BigInt out = 1;
  for (auto const& [p, k] : factorize(N).factors()) {
    unsigned long lift = (2UL * g * g + g) * (k - 1);
    out *= ipow(big(p), lift) * sp_order_prime(g, p);
  }
  return out;
}

BigInt isotropic_tuple_count(unsigned g, unsigned h, std::uint64_t p) {
  if (h < 1 || h > g) {
    throw std::invalid_argument("isotropic_tuple_count needs 1 <= h <= g");
  }
  check_prime(p);
  BigInt bp = big(p);
  BigInt falling = 1;
  for (unsigned j = 0; j < h; ++j) {
    falling *= ipow(bp, 2UL * g - j) - ipow(bp, j);
  }
  Rational closed(ipow(bp, 2UL * g * h - static_cast<unsigned long>(h) * (h - 1) / 2));
  for (unsigned i = g - h + 1; i <= g; ++i) {
    closed *= Rational(1) - Rational(bp).pow(-2L * i);
  }
  if (closed != Rational(falling)) {
    throw std::logic_error("isotropic tuple count: product " + falling.get_str() +
                           " != closed form " + closed.str());
  }
  return falling;
}

// ---------------------------------------------------------------- deg(phi)

DegreeResult deg_phi_special(unsigned g, unsigned k, unsigned h, std::uint64_t d) {
  if (k + h != g) {
    throw std::invalid_argument("deg_phi_special needs k + h = g");
  }
  if (h < 1 || d < 1) {
    throw std::invalid_argument("deg_phi_special needs h >= 1 and d >= 1");
  }
  Rational value = Rational(big(d)).pow(static_cast<long>(h) * (2 * g + 1));
  for (auto p : factorize(d).primes()) {
    for (unsigned i = g - h + 1; i <= g; ++i) {
      value *= Rational(1) - Rational(p).pow(-2L * i);
    }
  }
  return {checked_integer(value, "deg(phi)"), DegreeRoute::closed_form};
}

DegreeResult deg_phi(unsigned g, PolarizationType const& delta) {
  auto padded = delta.padded(g);
  Rational value = Rational(padded.product()).pow(2L * g + 1);
  for (unsigned j = 1; j <= g; ++j) {
    value *= prime_product(padded[j - 1], -2L * j);
  }
  return {checked_integer(value, "deg(phi)"), DegreeRoute::closed_form};
}

DegreeResult deg_phi_stratified(unsigned g, PolarizationType const& delta, std::uint64_t p) {
  check_prime(p);
  auto padded = delta.padded(g);
  for (auto d : padded.entries()) {
    auto const& f = factorize(d);
    if (d != 1 && !(f.factors().size() == 1 && f.factors()[0].prime == p)) {
      throw std::invalid_argument("stratified route needs every entry to be a power of " +
                                  std::to_string(p) + "; split mixed primes first");
    }
  }
  ScaledMatrixShape shape = ScaledMatrixShape::from_type(g, padded, p);
  unsigned h = shape.h();
  if (h == 0) {
    return {Rational(1), DegreeRoute::stratified};
  }
  // First layer: Sp_2g(F_p) acting on isotropic h-tuples.
  if (shape.forced_count(1) != 2 * g * h - h * (h - 1) / 2) {
    throw std::logic_error("first stratification layer does not match the isotropic tuple count");
  }
  BigInt value = isotropic_tuple_count(g, h, p);
  unsigned long exponent = 0;
  for (unsigned i = 2; i <= 2 * shape.max_valuation(); ++i) {
    exponent += shape.forced_count(i);
  }
  value *= ipow(big(p), exponent);
  return {Rational(value), DegreeRoute::stratified};
}

DegreeResult deg_phi_by_primes(unsigned g, PolarizationType const& delta) {
  auto padded = delta.padded(g);
  std::uint64_t top = padded[g - 1];
  BigInt value = 1;
  for (auto const& [p, top_exp] : factorize(top).factors()) {
    std::vector<std::uint64_t> part;
    for (auto d : padded.entries()) {
      std::uint64_t pp = 1;
      for (unsigned e = factorize(d).valuation(p); e > 0; --e) {
        pp *= p;
      }
      part.push_back(pp);
    }
    value *= deg_phi_stratified(g, PolarizationType(std::move(part)), p).value.to_integer();
  }
  return {Rational(value), DegreeRoute::stratified};
}

// ---------------------------------------------------------------- deg(pi)

DegreeResult deg_pi(unsigned g, PolarizationType const& delta) {
  auto padded = delta.padded(g);
  Rational value = deg_phi(g, padded).value;
  for (unsigned k = 1; k <= g; ++k) {
    value *= Rational(padded[k - 1]).pow(2L * g - 4L * k + 2);
  }
  for (unsigned i = 1; i <= g; ++i) {
    for (unsigned j = i + 1; j <= g; ++j) {
      for (auto p : factorize(padded[j - 1] / padded[i - 1]).primes()) {
        Rational bp(p);
        value *= (Rational(1) - bp.pow(-2L * (j - i))) / (Rational(1) - bp.pow(-2L * (j - i + 1)));
      }
    }
  }
  return {checked_integer(value, "deg(pi)"), DegreeRoute::closed_form};
}

// ---------------------------------------------------------------- enumeration

unsigned oracle_cap() {
  char const* env = std::getenv("AGTAUT_ORACLE_CAP");
  if (env == nullptr || *env == '\0') {
    return kOracleIndexDefaultCap;
  }
  char* end = nullptr;
  unsigned long requested = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0') {
    throw std::invalid_argument("AGTAUT_ORACLE_CAP must be a positive integer");
  }
  return static_cast<unsigned>(std::min<unsigned long>(requested, kOracleIndexHardCap));
}

DegreeResult oracle_index(std::uint64_t d) {
  unsigned cap = oracle_cap();
  if (d < 2 || d > cap) {
    throw std::invalid_argument("oracle_index needs 2 <= d <= " + std::to_string(cap));
  }
  std::int64_t const n = static_cast<std::int64_t>(d * d);
  std::int64_t const dd = static_cast<std::int64_t>(d);

  // Split the first matrix coordinate across workers; per-slice counts are
  // summed in a fixed order.
  unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::uint64_t> totals(workers, 0), matches(workers, 0);
  auto work = [&](unsigned w) {
    for (std::int64_t a = w; a < n; a += workers) {
      for (std::int64_t b = 0; b < n; ++b) {
        for (std::int64_t c = 0; c < n; ++c) {
          std::int64_t bc = (b * c) % n;
          for (std::int64_t e = 0; e < n; ++e) {
            if ((a * e - bc - 1) % n != 0) {
              continue;
            }
            ++totals[w];
            if (a % dd == 1 % dd && b == 0 && e % dd == 1 % dd) {
              ++matches[w];
            }
          }
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
    work(0);
  }
  std::uint64_t total = std::accumulate(totals.begin(), totals.end(), std::uint64_t{0});
  std::uint64_t match = std::accumulate(matches.begin(), matches.end(), std::uint64_t{0});
  return {Rational(BigInt(std::to_string(total), 10), BigInt(std::to_string(match), 10)),
          DegreeRoute::enumeration};
}

BigInt enumerate_sp_order(unsigned g, std::uint64_t N) {
  if (g == 0 || N < 2) {
    throw std::invalid_argument("enumerate_sp_order needs g >= 1 and N >= 2");
  }
  unsigned const dim = 2 * g;
  unsigned const cells = dim * dim;
  double log_count = cells * std::log2(static_cast<double>(N));
  if (log_count > 24.0 + 1e-9) {
    throw std::invalid_argument("enumerate_sp_order: N^{4g^2} exceeds 2^24");
  }
  std::int64_t const n = static_cast<std::int64_t>(N);
  // J = [[0, 1], [-1, 0]] in g x g blocks.
  auto j_entry = [g](unsigned r, unsigned c) -> std::int64_t {
    if (r < g && c == r + g) {
      return 1;
    }
    if (r >= g && c + g == r) {
      return -1;
    }
    return 0;
  };
  std::vector<std::int64_t> m(cells, 0);
  std::uint64_t count = 0;
  while (true) {
    // Check M^T J M == J mod N.
    bool ok = true;
    for (unsigned r = 0; r < dim && ok; ++r) {
      for (unsigned c = 0; c < dim && ok; ++c) {
        std::int64_t s = 0;
        for (unsigned k = 0; k < g; ++k) {
          // (M^T J M)_{rc} = sum_k M_{k,r} M_{k+g,c} - M_{k+g,r} M_{k,c}
          s += m[k * dim + r] * m[(k + g) * dim + c] - m[(k + g) * dim + r] * m[k * dim + c];
        }
        if (((s - j_entry(r, c)) % n + n) % n != 0) {
          ok = false;
        }
      }
    }
    if (ok) {
      ++count;
    }
    unsigned i = 0;
    while (i < cells && ++m[i] == n) {
      m[i] = 0;
      ++i;
    }
    if (i == cells) {
      break;
    }
  }
  return BigInt(std::to_string(count), 10);
}

}  // namespace agtaut
