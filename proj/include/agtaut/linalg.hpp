#pragma once

// Dense matrices over exact rationals.  Small by design: the largest
// systems are the graded slices of the oracle ring computation.

#include "agtaut/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace agtaut {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Rational const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(Matrix const& rhs) const;
  friend bool operator==(Matrix const&, Matrix const&) = default;

  Rational determinant() const;
  std::size_t rank() const;
  // Nullopt when singular.
  std::optional<Matrix> inverse() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Row-reduced echelon form in place; returns pivot column per nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m);

}  // namespace agtaut
