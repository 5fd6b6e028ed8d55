#include "qflag/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qflag {

namespace {

using Dense = std::vector<mpz_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class dense_content(const Dense& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  mpz_class g = dense_content(p);
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
}

// Remainder of a by b up to a nonzero integer factor.
Dense pseudo_rem(Dense a, const Dense& b) {
  const size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    size_t shift = a.size() - b.size();
    mpz_class g = gcd(la, lb);
    mpz_class fa = lb / g;
    mpz_class fb = la / g;
    for (auto& c : a) c *= fa;
    for (size_t i = 0; i <= db; ++i) a[i + shift] -= fb * b[i];
    trim(a);
    if (a.size() > 1 && a.size() % 8 == 0) make_primitive(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Dense{1};
    Dense r = pseudo_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    make_primitive(b);
  }
  make_primitive(a);
  return a;
}

Dense dense_div_exact(Dense a, const Dense& b) {
  if (a.size() < b.size()) throw std::logic_error("poly_divide_exact: not divisible");
  Dense q(a.size() - b.size() + 1);
  const mpz_class& lb = b.back();
  for (size_t k = q.size(); k-- > 0;) {
    mpz_class& top = a[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw std::logic_error("poly_divide_exact: not divisible");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("poly_divide_exact: not divisible");
  return q;
}

// Exponent stride shared by two polynomials after shifting both to start at 0.
int joint_stride(const LaurentPoly& a, const LaurentPoly& b) {
  int g = 0;
  for (const auto* p : {&a, &b}) {
    int lo = p->low_exp();
    for (const auto& t : p->terms()) g = std::gcd(g, t.exp - lo);
  }
  return g == 0 ? 1 : g;
}

Dense to_dense(const LaurentPoly& p, int stride) {
  int lo = p.low_exp();
  Dense d((p.high_exp() - lo) / stride + 1);
  for (const auto& t : p.terms()) d[(t.exp - lo) / stride] = t.coeff;
  return d;
}

LaurentPoly from_dense(const Dense& d, int stride, int shift) {
  std::vector<LaurentPoly::Term> terms;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) terms.push_back({static_cast<int>(i) * stride + shift, d[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly LaurentPoly::constant(const mpz_class& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) r.terms_.push_back({terms_[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_monomial()) return shifted(o.terms_[0].exp).scaled(o.terms_[0].coeff);
  if (is_monomial()) return o.shifted(terms_[0].exp).scaled(terms_[0].coeff);
  int lo = low_exp() + o.low_exp();
  int hi = high_exp() + o.high_exp();
  size_t span = static_cast<size_t>(hi - lo) + 1;
  LaurentPoly r;
  if (span <= 4 * terms_.size() * o.terms_.size()) {
    Dense acc(span);
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        mpz_addmul(acc[a.exp + b.exp - lo].get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    for (size_t k = 0; k < span; ++k)
      if (acc[k] != 0) r.terms_.push_back({static_cast<int>(k) + lo, std::move(acc[k])});
    return r;
  }
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.push_back({a.exp + b.exp, a.coeff * b.coeff});
  std::sort(all.begin(), all.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  for (auto& t : all) {
    if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
      r.terms_.back().coeff += t.coeff;
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  if (c != 1)
    for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

std::strong_ordering LaurentPoly::compare(const LaurentPoly& o) const {
  if (auto c = terms_.size() <=> o.terms_.size(); c != 0) return c;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (auto c = terms_[i].exp <=> o.terms_[i].exp; c != 0) return c;
    int k = cmp(terms_[i].coeff, o.terms_[i].coeff);
    if (k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void LaurentPoly::divide_exact(const mpz_class& c) {
  for (auto& t : terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
}

mpq_class LaurentPoly::evaluate(const mpq_class& point) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class p = 1;
    mpq_class base = t.exp >= 0 ? point : mpq_class(1) / point;
    unsigned long e = static_cast<unsigned long>(t.exp >= 0 ? t.exp : -t.exp);
    mpz_pow_ui(mpq_numref(p.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(p.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    p.canonicalize();
    sum += p * t.coeff;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool neg = it->coeff < 0;
    mpz_class mag = abs(it->coeff);
    if (neg)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (it->exp == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "v^" + std::to_string(it->exp);
    }
  }
  return out;
}

size_t LaurentPoly::hash() const {
  size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ static_cast<size_t>(t.exp);
    h = h * 1000003u ^ static_cast<size_t>(mpz_get_si(t.coeff.get_mpz_t()));
  }
  return h;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& p = a.is_zero() ? b : a;
    Dense d = to_dense(p, 1);
    make_primitive(d);
    return from_dense(d, 1, 0);
  }
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly::constant(1);
  int stride = joint_stride(a, b);
  Dense g = dense_gcd(to_dense(a, stride), to_dense(b, stride));
  return from_dense(g, stride, 0);
}

LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly r = a.shifted(-b.low_exp());
    r.divide_exact(b.leading_coeff());
    return r;
  }
  int stride = joint_stride(a, b);
  Dense q = dense_div_exact(to_dense(a, stride), to_dense(b, stride));
  return from_dense(q, stride, a.low_exp() - b.low_exp());
}

QScalar::QScalar(long n) : num_(LaurentPoly::constant(n)) {}

QScalar QScalar::from_poly(LaurentPoly num) {
  QScalar s;
  s.num_ = std::move(num);
  return s;
}

QScalar QScalar::fraction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("QScalar: zero denominator");
  QScalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

QScalar QScalar::vpow(int k) { return from_poly(LaurentPoly::monomial(k, 1)); }

QScalar QScalar::rational(const mpq_class& r) {
  return fraction(LaurentPoly::constant(r.get_num()), LaurentPoly::constant(r.get_den()));
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  if (den_.low_exp() != 0) {
    int s = den_.low_exp();
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
  if (!den_.is_constant()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly_divide_exact(num_, g);
      den_ = poly_divide_exact(den_, g);
    }
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class c = gcd(num_.content(), den_.content());
  if (c != 1) {
    num_.divide_exact(c);
    den_.divide_exact(c);
  }
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) return from_poly(num_ + o.num_);
  QScalar r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else if (o.den_.is_one()) {
    r.num_ = num_ + o.num_ * den_;
    r.den_ = den_;
    // num/den + p with gcd(num, den) = 1 stays reduced up to content
    if (r.num_.is_zero()) return {};
    mpz_class c = gcd(r.num_.content(), r.den_.content());
    if (c != 1) {
      r.num_.divide_exact(c);
      r.den_.divide_exact(c);
    }
    return r;
  } else if (den_.is_one()) {
    return o + *this;
  } else {
    LaurentPoly g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
      r.num_ = num_ * o.den_ + o.num_ * den_;
      r.den_ = den_ * o.den_;
    } else {
      LaurentPoly a = poly_divide_exact(den_, g);
      LaurentPoly b = poly_divide_exact(o.den_, g);
      r.num_ = num_ * b + o.num_ * a;
      r.den_ = a * o.den_;
    }
  }
  r.normalize();
  return r;
}

QScalar QScalar::operator-(const QScalar& o) const { return *this + (-o); }

QScalar QScalar::operator*(const QScalar& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (den_.is_one() && o.den_.is_one()) return from_poly(num_ * o.num_);
  if (o.num_.is_monomial() && o.den_.is_one() && abs(o.num_.leading_coeff()) == 1) {
    QScalar r = *this;
    r.num_ = r.num_ * o.num_;
    return r;
  }
  if (num_.is_monomial() && den_.is_one() && abs(num_.leading_coeff()) == 1) return o * *this;
  QScalar r;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
  QScalar r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

QScalar QScalar::operator/(const QScalar& o) const { return *this * o.inverse(); }

QScalar QScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

size_t QScalar::hash() const { return num_.hash() * 31 + den_.hash(); }

std::string QScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) { return os << s.to_string(); }

namespace {

LaurentPoly parse_poly(std::string_view s) {
  std::vector<LaurentPoly::Term> terms;
  size_t i = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("bad scalar '") + std::string(s) + "': " + why);
  };
  if (s.empty()) fail("empty");
  LaurentPoly acc;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    mpz_class coeff = 1;
    bool has_coeff = false;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coeff = mpz_class(std::string(s.substr(start, i - start)));
      has_coeff = true;
    }
    int exp = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail("dangling '*'");
      ++i;
    }
    if (i < s.size() && s[i] == 'v') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t es = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es || (i == es + 1 && s[es] == '-')) fail("missing exponent");
        exp = std::stoi(std::string(s.substr(es, i - es)));
      }
    } else if (!has_coeff) {
      fail("expected term");
    }
    acc = acc + LaurentPoly::monomial(exp, coeff * sign);
  }
  return acc;
}

std::string_view strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

QScalar QScalar::parse(std::string_view s) {
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  std::string_view t = compact;
  size_t depth = 0, slash = std::string_view::npos;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')') --depth;
    if (t[i] == '/' && depth == 0) slash = i;
  }
  if (slash == std::string_view::npos) return fraction(parse_poly(strip_parens(t)), LaurentPoly::constant(1));
  return fraction(parse_poly(strip_parens(t.substr(0, slash))), parse_poly(strip_parens(t.substr(slash + 1))));
}

QField::QField(int L, int root_of_unity_bound) : L_(L), root_bound_(root_of_unity_bound) {
  if (L <= 0) throw std::invalid_argument("QField: L must be positive");
}

QScalar QField::q_pow(const mpq_class& e) const {
  mpq_class k = e * L_;
  if (k.get_den() != 1) throw std::domain_error("q power " + e.get_str() + " not integral in v");
  return QScalar::vpow(static_cast<int>(k.get_num().get_si()));
}

QScalar QField::q_int(int n) const {
  // q^{n-1} + q^{n-3} + ... + q^{1-n}, negated for n < 0
  int m = n < 0 ? -n : n;
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0; k < m; ++k) terms.push_back({L_ * (1 - m + 2 * k), n < 0 ? -1 : 1});
  return QScalar::from_poly(LaurentPoly::from_terms(std::move(terms)));
}

QScalar QField::q_diff_inv() const { return (q() - q_pow(-1)).inverse(); }

Evaluation QField::evaluate(const QScalar& s, const mpq_class& point) const {
  if (point == 0) throw std::invalid_argument("evaluate: point must be nonzero");
  mpq_class d = s.den().evaluate(point);
  if (d == 0) throw PoleError("evaluate: denominator vanishes at v = " + point.get_str());
  Evaluation ev{s.num().evaluate(point) / d, std::nullopt};
  mpq_class qv = LaurentPoly::monomial(L_).evaluate(point);
  mpq_class p = 1;
  for (int k = 1; k <= root_bound_; ++k) {
    p *= qv;
    if (p == 1) {
      ev.root_of_unity_order = k;
      break;
    }
  }
  return ev;
}

}  // namespace qflag
