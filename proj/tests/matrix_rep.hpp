#pragma once

// Finite-dimensional representations given by explicit matrices for the
// simple generators. Used as an oracle independent of the rewriting tables:
// composite root vectors are built from their defining q-commutators.

#include <stdexcept>

#include "qflag/linalg.hpp"
#include "qflag/uq_algebra.hpp"

namespace qflag::testing {

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!b.at(k, l).is_zero()) r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

struct MatRep {
  const UqAlgebra* U = nullptr;
  std::vector<Weight> weights;  // weight of each basis vector
  std::vector<Matrix> E, F;     // per simple root index

  size_t dim() const { return weights.size(); }

  Matrix K(const Weight& mu) const {
    Matrix m(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) m.at(i, i) = U->field().q_pow(U->datum().pairing(mu, weights[i]));
    return m;
  }

  Matrix root(bool e, int r) const {
    const RootDatum& rd = U->datum();
    int s = rd.root_simple_index(r);
    if (s >= 0) return e ? E[s] : F[s];
    const Matrix& x1 = e ? E[0] : F[0];
    const Matrix& x2 = e ? E[1] : F[1];
    Matrix p = x1 * x2, p2 = x2 * x1;
    QScalar qi = U->field().q_pow(-1);
    Matrix out(dim(), dim());
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = 0; j < dim(); ++j) out.at(i, j) = p.at(i, j) - qi * p2.at(i, j);
    return out;
  }

  Matrix of(const UqElement& x) const {
    Matrix total(dim(), dim());
    int nr = U->datum().num_positive_roots();
    for (const auto& [m, c] : x) {
      Matrix cur = Matrix::identity(dim());
      for (int r = 0; r < nr; ++r)
        for (int k = 0; k < m.f[r]; ++k) cur = cur * root(false, r);
      cur = cur * K(m.k);
      for (int r = 0; r < nr; ++r)
        for (int k = 0; k < m.e[r]; ++k) cur = cur * root(true, r);
      for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j)
          if (!cur.at(i, j).is_zero()) total.at(i, j) += c * cur.at(i, j);
    }
    return total;
  }
};

// V (x) W using Delta(E) = E(x)1 + K(x)E, Delta(F) = F(x)K^-1 + 1(x)F
inline MatRep tensor(const MatRep& a, const MatRep& b) {
  MatRep t;
  t.U = a.U;
  for (const auto& wa : a.weights)
    for (const auto& wb : b.weights) t.weights.push_back(wa + wb);
  const RootDatum& rd = a.U->datum();
  Matrix ia = Matrix::identity(a.dim()), ib = Matrix::identity(b.dim());
  for (int i = 0; i < rd.rank(); ++i) {
    const Weight& al = rd.simple_root(i);
    t.E.push_back(kron(a.E[i], ib) + kron(a.K(al), b.E[i]));
    t.F.push_back(kron(a.F[i], b.K(-al)) + kron(ia, b.F[i]));
  }
  return t;
}

inline Matrix unit_matrix(size_t n, size_t i, size_t j) {
  Matrix m(n, n);
  m.at(i, j) = 1;
  return m;
}

// A1: V_1 with v0 of weight omega, v1 = F v0
inline MatRep a1_natural(const UqAlgebra& U) {
  MatRep r;
  r.U = &U;
  r.weights = {Weight(1), Weight(-1)};
  r.E = {unit_matrix(2, 0, 1)};
  r.F = {unit_matrix(2, 1, 0)};
  return r;
}

// A1: V_2 with basis v0, v1 = F v0, v2 = F v1 / [2]
inline MatRep a1_adjoint(const UqAlgebra& U) {
  MatRep r;
  r.U = &U;
  r.weights = {Weight(2), Weight(0), Weight(-2)};
  QScalar two = U.field().q_int(2);
  Matrix e(3, 3), f(3, 3);
  f.at(1, 0) = 1;
  f.at(2, 1) = 1;
  e.at(0, 1) = two;
  e.at(1, 2) = two;
  r.E = {e};
  r.F = {f};
  return r;
}

// A2: natural module with weights omega_1, omega_2 - omega_1, -omega_2
inline MatRep a2_natural(const UqAlgebra& U) {
  MatRep r;
  r.U = &U;
  r.weights = {Weight(1, 0), Weight(-1, 1), Weight(0, -1)};
  r.E = {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2)};
  r.F = {unit_matrix(3, 1, 0), unit_matrix(3, 2, 1)};
  return r;
}

// A2: dual module with weights omega_2, omega_1 - omega_2, -omega_1
inline MatRep a2_dual(const UqAlgebra& U) {
  MatRep r;
  r.U = &U;
  r.weights = {Weight(0, 1), Weight(1, -1), Weight(-1, 0)};
  r.E = {unit_matrix(3, 1, 2), unit_matrix(3, 0, 1)};
  r.F = {unit_matrix(3, 2, 1), unit_matrix(3, 1, 0)};
  return r;
}

}  // namespace qflag::testing
