#pragma once

#include <vector>

#include "qflag/scalars.hpp"

namespace qflag {

// Dense matrix over Q(v), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  QScalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const QScalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  std::vector<QScalar> apply(const std::vector<QScalar>& x) const;
  bool is_zero() const;
  bool operator==(const Matrix&) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<QScalar> data_;
};

struct RowEchelon {
  Matrix reduced;            // reduced row echelon form
  std::vector<size_t> pivots;  // pivot column per nonzero row
  size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);
size_t rank(const Matrix& m);
// basis of {x : m x = 0}
std::vector<std::vector<QScalar>> kernel(const Matrix& m);
// inverse of a square invertible matrix; throws if singular
Matrix inverse(const Matrix& m);
// one solution of m x = b, or empty optional-like flag via the bool
bool solve(const Matrix& m, const std::vector<QScalar>& b, std::vector<QScalar>& x);

}  // namespace qflag
