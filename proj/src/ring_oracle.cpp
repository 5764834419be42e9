#include "agtaut/ring_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace agtaut {

namespace {

void enumerate(unsigned g, unsigned index, unsigned remaining, Exponents& current,
               std::vector<Exponents>& out) {
  if (index == 0) {
    if (remaining == 0) {
      out.push_back(current);
    }
    return;
  }
  for (unsigned e = 0; e * index <= remaining; ++e) {
    current[index - 1] = e;
    enumerate(g, index - 1, remaining - e * index, current, out);
  }
  current[index - 1] = 0;
}

bool is_square_free_basis(Exponents const& e) {
  unsigned g = static_cast<unsigned>(e.size());
  if (e[g - 1] != 0) {
    return false;
  }
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x <= 1; });
}

IndexSet to_set(Exponents const& e) {
  IndexSet s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 1) {
      s |= IndexSet{1} << i;
    }
  }
  return s;
}

}  // namespace

std::vector<Exponents> monomials_of_weight(unsigned g, unsigned w) {
  std::vector<Exponents> out;
  Exponents current(g, 0);
  enumerate(g, g, w, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

TautClass oracle_reduce(LambdaPolynomial const& p) {
  unsigned g = p.genus();
  if (g > kOracleMaxGenus) {
    throw std::invalid_argument("oracle_reduce is capped at genus " +
                                std::to_string(kOracleMaxGenus));
  }
  auto w_opt = p.homogeneous_weight();
  if (!w_opt) {
    throw std::invalid_argument("oracle_reduce needs a homogeneous polynomial");
  }
  unsigned w = *w_opt;
  if (w > socle_degree(g)) {
    throw std::invalid_argument("oracle_reduce: weight exceeds C(g,2)");
  }

  // Columns: non-basis monomials first so pivots land on them.
  std::vector<Exponents> monomials = monomials_of_weight(g, w);
  std::stable_partition(monomials.begin(), monomials.end(),
                        [](Exponents const& e) { return !is_square_free_basis(e); });
  std::size_t non_basis =
      static_cast<std::size_t>(std::count_if(monomials.begin(), monomials.end(),
                                             [](Exponents const& e) { return !is_square_free_basis(e); }));
  std::map<Exponents, std::size_t> column;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    column.emplace(monomials[i], i);
  }

  // Generators of the ideal: homogeneous parts of c(E)c(E^v) - 1 and lambda_g.
  std::vector<LambdaPolynomial> generators;
  LambdaPolynomial mumford = chern_product(g) - LambdaPolynomial::constant(g, 1);
  for (unsigned d = 1; d <= w; ++d) {
    LambdaPolynomial part = mumford.homogeneous_part(d);
    if (!part.is_zero()) {
      generators.push_back(std::move(part));
    }
  }
  generators.push_back(LambdaPolynomial::lambda(g, g));

  std::vector<LambdaPolynomial> rows;
  for (auto const& gen : generators) {
    unsigned gw = *gen.homogeneous_weight();
    if (gw > w) {
      continue;
    }
    for (auto const& m : monomials_of_weight(g, w - gw)) {
      rows.push_back(gen * LambdaPolynomial::monomial(g, m));
    }
  }

  Matrix ideal(rows.size(), monomials.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto const& [e, c] : rows[r].terms()) {
      ideal(r, column.at(e)) = c;
    }
  }
  auto pivots = row_reduce(ideal);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= non_basis) {
      throw std::logic_error("square-free monomials are dependent modulo the ideal in weight " +
                             std::to_string(w));
    }
  }

  std::vector<Rational> target(monomials.size());
  for (auto const& [e, c] : p.terms()) {
    target[column.at(e)] = c;
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rational factor = target[pivots[r]];
    if (factor.is_zero()) {
      continue;
    }
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      if (!ideal(r, c).is_zero()) {
        target[c] -= factor * ideal(r, c);
      }
    }
  }

  TautClass out(g);
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    if (target[c].is_zero()) {
      continue;
    }
    if (c < non_basis) {
      throw std::logic_error("square-free monomials do not span the quotient in weight " +
                             std::to_string(w));
    }
    out.add_term(to_set(monomials[c]), target[c]);
  }
  return out;
}

}  // namespace agtaut
