#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qflag/scalars.hpp"

using namespace qflag;

namespace {

QScalar random_poly(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(-6, 6), co(-5, 5);
  LaurentPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p = p + LaurentPoly::monomial(ex(rng), co(rng));
  return QScalar::from_poly(p);
}

QScalar random_fraction(std::mt19937& rng) {
  QScalar d;
  do d = random_poly(rng, 3);
  while (d.is_zero());
  return random_poly(rng) / d;
}

}  // namespace

TEST_CASE("q_int small values", "[scalars]") {
  QField f(1);
  CHECK(f.q_int(0) == QScalar(0));
  CHECK(f.q_int(1) == QScalar(1));
  CHECK(f.q_int(2) == f.q() + f.q_pow(-1));
  // agrees with the quotient written out
  for (int n = -6; n <= 6; ++n) {
    QScalar direct = (f.q_pow(n) - f.q_pow(-n)) / (f.q() - f.q_pow(-1));
    CHECK(f.q_int(n) == direct);
  }
}

TEST_CASE("evaluate", "[scalars]") {
  QField f(1);
  CHECK(f.evaluate(f.q() + f.q_pow(-1), 1).value == 2);
  CHECK_THROWS_AS(f.evaluate(f.q_diff_inv(), 1), PoleError);
  CHECK_THROWS_AS(f.evaluate(f.q(), 0), std::invalid_argument);
  // (8 - 1/8) / (2 - 1/2)
  CHECK(f.evaluate(f.q_int(3), 2).value == mpq_class(21, 4));

  auto ev = f.evaluate(f.q(), -1);
  REQUIRE(ev.root_of_unity_order.has_value());
  CHECK(*ev.root_of_unity_order == 2);
  CHECK_FALSE(f.evaluate(f.q(), 2).root_of_unity_order.has_value());
  // L = 4: q = v^4 is 1 at v = -1
  QField f4(4);
  CHECK(*f4.evaluate(f4.q(), -1).root_of_unity_order == 1);
}

TEST_CASE("canonical form", "[scalars]") {
  // (v^2 - 1) / (v - 1) reduces to v + 1
  auto num = LaurentPoly::monomial(2) - LaurentPoly::constant(1);
  auto den = LaurentPoly::monomial(1) - LaurentPoly::constant(1);
  QScalar s = QScalar::fraction(num, den);
  CHECK(s.is_laurent());
  CHECK(s == QScalar::vpow(1) + QScalar(1));
  // sign and content normalized into the numerator
  QScalar t = QScalar::fraction(LaurentPoly::constant(2), LaurentPoly::constant(-4));
  CHECK(t == QScalar::rational(mpq_class(-1, 2)));
  CHECK(t.to_string() == "(-1)/(2)");
  // v-powers of the denominator move to the numerator
  QScalar u = QScalar(1) / QScalar::vpow(3);
  CHECK(u == QScalar::vpow(-3));
}

TEST_CASE("string round trip", "[scalars]") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    QScalar s = random_fraction(rng);
    CHECK(QScalar::parse(s.to_string()) == s);
  }
  CHECK(QScalar::parse("v^2+2*v^-1-3") == QScalar::vpow(2) + QScalar::vpow(-1) * QScalar(2) - QScalar(3));
  CHECK_THROWS(QScalar::parse("v^"));
  CHECK_THROWS(QScalar::parse(""));
}

TEST_CASE("field axioms on random fractions", "[scalars][property]") {
  std::mt19937 rng(20240517);
  for (int i = 0; i < 150; ++i) {
    QScalar a = random_fraction(rng), b = random_fraction(rng), c = random_fraction(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("q_int identities", "[scalars][property]") {
  for (int L : {1, 4, 6}) {
    QField f(L);
    for (int n = -50; n <= 50; ++n) CHECK(f.q_int(-n) == -f.q_int(n));
    std::mt19937 rng(L);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 60; ++i) {
      int m = d(rng), n = d(rng);
      CHECK(f.q_int(m + n) == f.q_pow(n) * f.q_int(m) + f.q_pow(-m) * f.q_int(n));
    }
  }
}

TEST_CASE("fractional q powers", "[scalars]") {
  QField f(6);
  CHECK(f.q_pow(mpq_class(1, 3)) == QScalar::vpow(2));
  CHECK(f.q_pow(mpq_class(-1, 2)) == QScalar::vpow(-3));
  CHECK_THROWS_AS(f.q_pow(mpq_class(1, 4)), std::domain_error);
}

TEST_CASE("gcd with strided exponents", "[scalars]") {
  QField f(6);
  QScalar x = f.q_int(4) / f.q_int(2);  // q^2 + q^-2
  CHECK(x == f.q_pow(2) + f.q_pow(-2));
  QScalar y = (f.q_int(6) * f.q_int(5)) / (f.q_int(3) * f.q_int(5));
  CHECK(y == f.q_int(6) / f.q_int(3));
  CHECK(y.is_laurent());
}
