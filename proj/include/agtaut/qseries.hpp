#pragma once

#include "agtaut/rational.hpp"

#include <string>
#include <vector>

namespace agtaut {

// Power series in q truncated after q^order; exactly order + 1 coefficients.
class QSeries {
 public:
  explicit QSeries(unsigned order);
  QSeries(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  std::vector<Rational> const& coeffs() const { return coeffs_; }
  Rational const& operator[](unsigned n) const { return coeffs_.at(n); }
  Rational& operator[](unsigned n) { return coeffs_.at(n); }

  QSeries& operator*=(Rational const& c);
  friend QSeries operator*(Rational const& c, QSeries s) { return s *= c; }
  friend bool operator==(QSeries const&, QSeries const&) = default;

  // "1 + 240 q + 2160 q^2"; zero coefficients are skipped.
  std::string str() const;

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

}  // namespace agtaut
