#include "agtaut/arith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace agtaut {

Factorization::Factorization(std::uint64_t base, std::vector<PrimePower> factors)
    : base_(base), factors_(std::move(factors)) {}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (auto const& f : factors_) {
    out.push_back(f.prime);
  }
  return out;
}

unsigned Factorization::valuation(std::uint64_t p) const {
  for (auto const& f : factors_) {
    if (f.prime == p) {
      return f.exponent;
    }
  }
  return 0;
}

namespace {

Factorization trial_divide(std::uint64_t n) {
  std::vector<PrimePower> factors;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) {
      factors.push_back({p, e});
    }
  }
  if (rest > 1) {
    factors.push_back({rest, 1});
  }
  return Factorization(n, std::move(factors));
}

// Node-based map: references handed out stay valid across inserts.
struct FactorCache {
  std::shared_mutex mutex;
  std::map<std::uint64_t, std::unique_ptr<Factorization const>> entries;
};

FactorCache& factor_cache() {
  static FactorCache cache;
  return cache;
}

}  // namespace

Factorization const& factorize(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("factorize: 0 has no factorization");
  }
  if (n > kFactorizeLimit) {
    throw std::invalid_argument("factorize: " + std::to_string(n) + " exceeds the trial-division cap 10^12");
  }
  auto& cache = factor_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(n);
    if (it != cache.entries.end()) {
      return *it->second;
    }
  }
  auto fresh = std::make_unique<Factorization const>(trial_divide(n));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.entries.try_emplace(n, std::move(fresh));
  return *it->second;
}

bool is_prime(std::uint64_t n) { return n >= 2 && factorize(n).is_prime(); }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto const& [p, e] : factorize(n).factors()) {
    std::size_t existing = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < existing; ++j) {
        out.push_back(out[j] * power);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    unsigned m = static_cast<unsigned>(table.size());
    // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    Rational acc;
    BigInt binom = 1;  // C(m+1, 0)
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binom) * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    table.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return table[n];
}

Rational abs_bernoulli(unsigned n) { return bernoulli(n).abs(); }

Rational sigma(int k, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("sigma: n must be positive");
  }
  Rational acc;
  for (auto m : divisors(n)) {
    acc += Rational(m).pow(k);
  }
  return acc;
}

Rational prime_product(std::uint64_t n, long exponent) {
  Rational acc(1);
  for (auto const& f : factorize(n).factors()) {
    acc *= Rational(1) - Rational(f.prime).pow(exponent);
  }
  return acc;
}

Rational jacobi_totient(unsigned k, std::uint64_t n) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument("jacobi_totient: n and k must be positive");
  }
  return Rational(n).pow(k) * prime_product(n, -static_cast<long>(k));
}

int mobius(std::uint64_t n) {
  auto const& f = factorize(n);
  for (auto const& pp : f.factors()) {
    if (pp.exponent > 1) {
      return 0;
    }
  }
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

Rational dirichlet_convolve(ArithmeticFunction const& f, ArithmeticFunction const& g,
                            std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("dirichlet_convolve: n must be positive");
  }
  Rational acc;
  for (auto m : divisors(n)) {
    acc += f(m) * g(n / m);
  }
  return acc;
}

}  // namespace agtaut
