#include "qflag/linalg.hpp"

#include <stdexcept>

namespace qflag {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const QScalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<QScalar> Matrix::apply(const std::vector<QScalar>& x) const {
  std::vector<QScalar> y(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // smallest entry as pivot keeps intermediate fractions small
    size_t best = m.rows();
    for (size_t r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero() && (best == m.rows() || m.at(r, col).weight() < m.at(best, col).weight()))
        best = r;
    if (best == m.rows()) continue;
    if (best != row)
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(best, c));
    QScalar inv = m.at(row, col).inverse();
    for (size_t c = col; c < m.cols(); ++c)
      if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      QScalar f = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c)
        if (!m.at(row, c).is_zero()) m.at(r, c) -= f * m.at(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<QScalar>> kernel(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<QScalar>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<QScalar> v(m.cols());
    v[free] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: not square");
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
  return inv;
}

bool solve(const Matrix& m, const std::vector<QScalar>& b, std::vector<QScalar>& x) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return false;
  x.assign(m.cols(), QScalar());
  for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(r, m.cols());
  return true;
}

}  // namespace qflag
