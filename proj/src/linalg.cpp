#include "agtaut/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace agtaut {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::operator*(Matrix const& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product: shape mismatch");
  }
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Rational const& a = (*this)(i, k);
      if (a.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col).is_zero()) {
      ++found;
    }
    if (found == m.rows()) {
      continue;
    }
    if (found != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(found, j), m(row, j));
      }
    }
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
      m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) {
        continue;
      }
      Rational factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) {
          m(r, j) -= factor * m(row, j);
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  Matrix m = *this;
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t found = col;
    while (found < rows_ && m(found, col).is_zero()) {
      ++found;
    }
    if (found == rows_) {
      return Rational(0);
    }
    if (found != col) {
      for (std::size_t j = 0; j < cols_; ++j) {
        std::swap(m(found, j), m(col, j));
      }
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) {
        continue;
      }
      Rational factor = m(r, col) / m(col, col);
      for (std::size_t j = col; j < cols_; ++j) {
        m(r, j) -= factor * m(col, j);
      }
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return row_reduce(m).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("inverse of a non-square matrix");
  }
  std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug(i, j) = (*this)(i, j);
    }
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = aug(i, n + j);
    }
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << (j ? ", " : "") << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace agtaut
