#pragma once

// Multiplicative number theory over exact rationals: Bernoulli numbers,
// divisor power sums, Jacobi totients, Moebius, Dirichlet convolution and
// trial-division factorization.

#include "agtaut/rational.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace agtaut {

// Largest input accepted by factorize().  Trial division is exact and
// deterministic up to here.
inline constexpr std::uint64_t kFactorizeLimit = 1'000'000'000'000ULL;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

class Factorization {
 public:
  Factorization(std::uint64_t base, std::vector<PrimePower> factors);

  std::uint64_t base() const { return base_; }
  std::vector<PrimePower> const& factors() const { return factors_; }
  std::vector<std::uint64_t> primes() const;
  bool is_prime() const { return factors_.size() == 1 && factors_[0].exponent == 1; }
  // Exponent of p in base (0 when p does not divide).
  unsigned valuation(std::uint64_t p) const;

 private:
  std::uint64_t base_;
  std::vector<PrimePower> factors_;
};

// Throws std::invalid_argument for n == 0 or n > kFactorizeLimit.
// Results are cached; the cache is safe for concurrent use.
Factorization const& factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// B_n under the convention sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1
// (so B_1 = -1/2).  Memoized.
Rational bernoulli(unsigned n);
Rational abs_bernoulli(unsigned n);

// sum_{m | n} m^k; k may be negative.
Rational sigma(int k, std::uint64_t n);

// J_k(n) = n^k prod_{p | n} (1 - p^{-k}).  Always an integer.
Rational jacobi_totient(unsigned k, std::uint64_t n);

int mobius(std::uint64_t n);

using ArithmeticFunction = std::function<Rational(std::uint64_t)>;

// (f * g)(n) = sum_{m | n} f(m) g(n / m).
Rational dirichlet_convolve(ArithmeticFunction const& f, ArithmeticFunction const& g,
                            std::uint64_t n);

// prod_{p | n} (1 - p^{exponent}) over the distinct primes of n.
Rational prime_product(std::uint64_t n, long exponent);

}  // namespace agtaut
