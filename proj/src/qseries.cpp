#include "agtaut/qseries.hpp"

#include "agtaut/format.hpp"

#include <stdexcept>

namespace agtaut {

QSeries::QSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

QSeries::QSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("q-series of order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " coefficients");
  }
}

QSeries& QSeries::operator*=(Rational const& c) {
  for (auto& x : coeffs_) {
    x *= c;
  }
  return *this;
}

std::string QSeries::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (unsigned n = 0; n <= order_; ++n) {
    std::string label = n == 0 ? "" : (n == 1 ? "q" : "q^" + std::to_string(n));
    parts.emplace_back(coeffs_[n], label);
  }
  return format_terms(parts, " ");
}

}  // namespace agtaut
