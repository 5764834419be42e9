#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agtaut/arith.hpp"
#include "agtaut/isogeny.hpp"

#include <cstdlib>
#include <random>

using namespace agtaut;

namespace {

PolarizationType chain(std::vector<std::uint64_t> v) { return PolarizationType(std::move(v)); }

// Order of the group of automorphisms of K = (Z^g / delta)^2 preserving the
// alternating form sum_i (x_i y'_i - y_i x'_i) / d_i with values in Q/Z.
// Independent of the deg_pi closed form; brute force over generator images.
std::uint64_t symplectic_kernel_automorphisms(std::vector<std::uint64_t> const& delta) {
  std::size_t const g = delta.size();
  std::size_t const n = 2 * g;
  std::vector<std::uint64_t> order(n);
  for (std::size_t i = 0; i < g; ++i) {
    order[i] = order[i + g] = delta[i];
  }
  std::uint64_t const top = delta.back();
  using Element = std::vector<std::int64_t>;
  auto form = [&](Element const& a, Element const& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < g; ++i) {
      std::int64_t scale = static_cast<std::int64_t>(top / delta[i]);
      s += (a[i] * b[i + g] - a[i + g] * b[i]) * scale;
    }
    std::int64_t m = static_cast<std::int64_t>(top);
    return ((s % m) + m) % m;
  };
  std::vector<Element> elements;
  Element e(n, 0);
  while (true) {
    elements.push_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] == static_cast<std::int64_t>(order[i])) {
      e[i] = 0;
      ++i;
    }
    if (i == n) {
      break;
    }
  }
  auto killed_by = [&](Element const& x, std::uint64_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((x[i] * static_cast<std::int64_t>(k)) % static_cast<std::int64_t>(order[i]) != 0) {
        return false;
      }
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t gen = 0; gen < n; ++gen) {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (killed_by(elements[k], order[gen])) {
        candidates[gen].push_back(k);
      }
    }
  }
  std::vector<Element> basis(n, Element(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
  }
  std::vector<std::size_t> image(n);
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, std::size_t gen) -> void {
    if (gen == n) {
      ++count;
      return;
    }
    for (auto k : candidates[gen]) {
      bool ok = true;
      for (std::size_t prev = 0; prev < gen && ok; ++prev) {
        ok = form(elements[image[prev]], elements[k]) == form(basis[prev], basis[gen]);
      }
      if (ok) {
        image[gen] = k;
        self(self, gen + 1);
      }
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace

TEST_CASE("routes") {
  CHECK(route_name(DegreeRoute::stratified) == "stratified");
  CHECK(parse_route("enumeration") == DegreeRoute::enumeration);
  CHECK_THROWS_AS(parse_route("guess"), std::invalid_argument);
}

TEST_CASE("symplectic group orders") {
  CHECK(sp_order_prime(1, 2) == 6);
  CHECK(sp_order_prime(1, 3) == 24);
  CHECK(sp_order_prime(2, 2) == 720);
  CHECK(sp_order(3, 1) == 1);
  CHECK(sp_order(1, 4) == 48);
  CHECK(sp_order(1, 6) == 144);
  CHECK_THROWS_AS(sp_order_prime(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(sp_order(1, 0), std::invalid_argument);
}

TEST_CASE("symplectic group orders match enumeration") {
  CHECK(enumerate_sp_order(1, 2) == sp_order_prime(1, 2));
  CHECK(enumerate_sp_order(1, 3) == sp_order_prime(1, 3));
  CHECK(enumerate_sp_order(1, 5) == sp_order_prime(1, 5));
  CHECK(enumerate_sp_order(2, 2) == sp_order_prime(2, 2));
  for (std::uint64_t N = 2; N <= 16; ++N) {
    CHECK(enumerate_sp_order(1, N) == sp_order(1, N));
  }
  CHECK_THROWS_AS(enumerate_sp_order(2, 3), std::invalid_argument);
}

TEST_CASE("isotropic tuple counts") {
  CHECK(isotropic_tuple_count(1, 1, 2) == 3);
  CHECK(isotropic_tuple_count(2, 1, 2) == 15);
  CHECK(isotropic_tuple_count(2, 2, 2) == 90);
  for (unsigned g = 1; g <= 5; ++g) {
    for (unsigned h = 1; h <= g; ++h) {
      for (std::uint64_t p : {2, 3, 5}) {
        CHECK(isotropic_tuple_count(g, h, p) > 0);
      }
    }
  }
  CHECK_THROWS_AS(isotropic_tuple_count(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(isotropic_tuple_count(2, 1, 6), std::invalid_argument);
}

TEST_CASE("isotropic pairs in F_2^4 by enumeration") {
  std::uint64_t count = 0;
  auto form = [](unsigned a, unsigned b) {
    unsigned x = a & 3, y = a >> 2, xp = b & 3, yp = b >> 2;
    return __builtin_popcount((x & yp) ^ (y & xp)) & 1;
  };
  for (unsigned a = 1; a < 16; ++a) {
    for (unsigned b = 1; b < 16; ++b) {
      if (b != a && form(a, b) == 0) {
        ++count;
      }
    }
  }
  CHECK(count == 90);
}

TEST_CASE("deg phi") {
  CHECK(deg_phi_special(1, 0, 1, 1).value == 1);
  CHECK(deg_phi_special(1, 0, 1, 2).value == 6);
  CHECK(deg_phi_special(2, 1, 1, 2).value == 30);
  CHECK_THROWS_AS(deg_phi_special(2, 0, 1, 2), std::invalid_argument);
  CHECK(deg_phi(3, PolarizationType::principal(3)).value == 1);
  CHECK(deg_phi(2, chain({1, 2})).value == 30);
  CHECK(deg_phi(2, chain({2})).value == 30);
  CHECK(deg_phi(2, chain({2, 2})).value == 720);
  CHECK(deg_phi(2, chain({1, 4})).value == 960);
  std::uint64_t expected[] = {6, 24, 48, 120, 144};
  for (std::uint64_t d = 2; d <= 6; ++d) {
    CHECK(deg_phi(1, chain({d})).value == Rational(expected[d - 2]));
  }
  CHECK_THROWS_AS(deg_phi(1, chain({1, 2})), std::invalid_argument);
}

TEST_CASE("special and general deg phi agree") {
  for (unsigned g = 1; g <= 5; ++g) {
    for (std::uint64_t d = 1; d <= 12; ++d) {
      for (unsigned h = 1; h <= g; ++h) {
        std::vector<std::uint64_t> c(g - h, 1);
        c.insert(c.end(), h, d);
        REQUIRE(deg_phi_special(g, g - h, h, d).value == deg_phi(g, chain(c)).value);
      }
    }
  }
}

TEST_CASE("stratified route") {
  CHECK(deg_phi_stratified(1, chain({2}), 2).value == 6);
  CHECK(deg_phi_stratified(2, chain({1, 4}), 2).value == 960);
  CHECK(deg_phi_stratified(2, chain({2, 2}), 2).value == 720);
  CHECK(deg_phi_stratified(2, chain({2, 2}), 2).route == DegreeRoute::stratified);
  CHECK(deg_phi_stratified(3, PolarizationType::principal(3), 3).value == 1);
  CHECK_THROWS_AS(deg_phi_stratified(2, chain({2, 6}), 2), std::invalid_argument);
  CHECK_THROWS_AS(deg_phi_stratified(2, chain({3, 9}), 2), std::invalid_argument);
  for (unsigned g = 1; g <= 3; ++g) {
    for (std::uint64_t d : {6, 10, 12, 30}) {
      std::vector<std::uint64_t> c(g, d);
      c[0] = 1;
      CHECK(deg_phi_by_primes(g, chain(c)).value == deg_phi(g, chain(c)).value);
    }
  }
}

TEST_CASE("scaled matrix shapes") {
  ScaledMatrixShape s(3, {0, 1, 2});
  CHECK(s.h() == 2);
  CHECK(s.max_valuation() == 2);
  CHECK(s.a_exponent(1, 0) == 1);
  CHECK(s.b_exponent(1, 2) == 3);
  CHECK(s.c_exponent(2, 2) == 0);
  CHECK(s.e_exponent(0, 2) == 2);
  CHECK(s.total_forced() == 7 * 3);
  CHECK(ScaledMatrixShape::from_type(3, chain({2, 12}), 2).valuations() ==
        std::vector<unsigned>{0, 1, 2});
  CHECK_THROWS_AS(ScaledMatrixShape(2, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ScaledMatrixShape(2, {1}), std::invalid_argument);

  std::mt19937 rng(77);
  std::uniform_int_distribution<unsigned> genus(1, 6), val(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned g = genus(rng);
    std::vector<unsigned> v(g);
    for (auto& x : v) {
      x = val(rng);
    }
    std::sort(v.begin(), v.end());
    ScaledMatrixShape shape(g, v);
    CHECK(shape.total_forced() == (2 * g + 1) * shape.valuation_sum());
  }
  for (unsigned g = 1; g <= 6; ++g) {
    for (unsigned h = 1; h <= g; ++h) {
      std::vector<unsigned> v(g - h, 0);
      v.insert(v.end(), h, 1);
      CHECK(ScaledMatrixShape(g, v).forced_count(1) == 2 * g * h - h * (h - 1) / 2);
    }
  }
}

TEST_CASE("deg pi") {
  CHECK(deg_pi(2, PolarizationType::principal(2)).value == 1);
  CHECK(deg_pi(1, chain({3})).value == 24);
  CHECK(deg_pi(2, chain({2, 2})).value == 720);
  CHECK(deg_pi(2, chain({2, 4})).value == 4608);
  CHECK(deg_pi(2, chain({1, 2})).value == 6);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    CHECK(deg_pi(1, chain({p})).value == Rational(sp_order_prime(1, p)));
  }
  for (unsigned g = 1; g <= 3; ++g) {
    for (std::uint64_t d = 1; d <= 6; ++d) {
      CHECK(deg_pi(g, chain(std::vector<std::uint64_t>(g, d))).value == Rational(sp_order(g, d)));
    }
  }
}

TEST_CASE("deg pi counts symplectic automorphisms of the kernel") {
  for (auto const& c : std::vector<std::vector<std::uint64_t>>{
           {2}, {3}, {4}, {6}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 4}, {1, 6}}) {
    CHECK(Rational(symplectic_kernel_automorphisms(c)) ==
          deg_pi(static_cast<unsigned>(c.size()), chain(c)).value);
  }
}

TEST_CASE("enumeration oracle") {
  for (std::uint64_t d = 2; d <= 6; ++d) {
    DegreeResult r = oracle_index(d);
    CHECK(r.route == DegreeRoute::enumeration);
    CHECK(r.value == deg_phi(1, chain({d})).value);
  }
  CHECK_THROWS_AS(oracle_index(1), std::invalid_argument);
  CHECK_THROWS_AS(oracle_index(9), std::invalid_argument);
}

TEST_CASE("oracle cap from the environment") {
  CHECK(oracle_cap() == kOracleIndexDefaultCap);
  setenv("AGTAUT_ORACLE_CAP", "100", 1);
  CHECK(oracle_cap() == kOracleIndexHardCap);
  setenv("AGTAUT_ORACLE_CAP", "3", 1);
  CHECK(oracle_cap() == 3);
  CHECK_THROWS_AS(oracle_index(4), std::invalid_argument);
  setenv("AGTAUT_ORACLE_CAP", "lots", 1);
  CHECK_THROWS_AS(oracle_cap(), std::invalid_argument);
  unsetenv("AGTAUT_ORACLE_CAP");
}
