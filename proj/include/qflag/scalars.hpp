#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qflag {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Laurent polynomial in v with integer coefficients, sparse, exponents ascending.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    mpz_class coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly monomial(int exp, const mpz_class& c = 1);
  // terms must be sorted by exponent with no zero coefficients
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int low_exp() const { return terms_.front().exp; }
  int high_exp() const { return terms_.back().exp; }
  const mpz_class& leading_coeff() const { return terms_.back().coeff; }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly shifted(int k) const;
  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const mpz_class& c) const;
  bool operator==(const LaurentPoly&) const = default;
  std::strong_ordering compare(const LaurentPoly& o) const;

  // positive gcd of the coefficients (0 for the zero polynomial)
  mpz_class content() const;
  void divide_exact(const mpz_class& c);
  mpq_class evaluate(const mpq_class& point) const;
  std::string to_string() const;
  size_t hash() const;

 private:
  std::vector<Term> terms_;
};

// primitive gcd with positive leading coefficient and lowest exponent 0
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// a / b where b divides a in Z[v, 1/v]; b is taken primitive up to sign
LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Element of Q(v). Canonical form: den in Z[v] with den(0) != 0 and positive
// leading coefficient, num in Z[v, 1/v], gcd(num, den) = 1, joint integer
// content 1. Equality is therefore structural.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long n);  // NOLINT(google-explicit-constructor)
  static QScalar from_poly(LaurentPoly num);
  static QScalar fraction(LaurentPoly num, LaurentPoly den);
  static QScalar vpow(int k);
  static QScalar rational(const mpq_class& r);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  QScalar operator-() const;
  QScalar operator+(const QScalar& o) const;
  QScalar operator-(const QScalar& o) const;
  QScalar operator*(const QScalar& o) const;
  QScalar operator/(const QScalar& o) const;
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }
  QScalar inverse() const;
  QScalar pow(long e) const;
  bool operator==(const QScalar& o) const = default;

  // rough size used for pivot selection
  size_t weight() const { return num_.terms().size() + den_.terms().size(); }
  size_t hash() const;

  std::string to_string() const;
  static QScalar parse(std::string_view s);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::constant(1);
};

std::ostream& operator<<(std::ostream& os, const QScalar& s);

struct Evaluation {
  mpq_class value;
  // order of q = point^L as a root of unity, if it is one of order <= bound
  std::optional<int> root_of_unity_order;
};

// Q(v) together with the cover exponent L (q = v^L).
class QField {
 public:
  explicit QField(int L, int root_of_unity_bound = 24);
  int L() const { return L_; }
  QScalar q() const { return QScalar::vpow(L_); }
  QScalar q_pow(int n) const { return QScalar::vpow(L_ * n); }
  // q^e for rational e; L*e must be an integer
  QScalar q_pow(const mpq_class& e) const;
  QScalar q_int(int n) const;
  // 1/(q - q^-1)
  QScalar q_diff_inv() const;
  Evaluation evaluate(const QScalar& s, const mpq_class& point) const;

 private:
  int L_;
  int root_bound_;
};

}  // namespace qflag
