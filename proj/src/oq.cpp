#include "qflag/oq.hpp"

#include <stdexcept>

#include "expr_parser.hpp"
#include "format.hpp"

namespace qflag {

using detail::lincomb_string;

namespace {

// generator index 0..3 for a, b, c, d; x_ij has index 2i + j
OqMono unit_mono(int g) {
  OqMono m{};
  m[g] = 1;
  return m;
}


}  // namespace

const OqSL2& OqSL2::get() {
  static const OqSL2 o;
  return o;
}

OqSL2::OqSL2() : U_(UqAlgebra::get(CartanType::A1)) {}

OqElement OqSL2::gen(int i, int j) const { return OqElement(unit_mono(2 * i + j)); }

OqElement OqSL2::left_mul(int g, const OqMono& m) const {
  const QField& f = field();
  auto [i, j, k, l] = m;
  OqElement r;
  switch (g) {
    case 0:  // a
      if (l == 0) {
        r.add(OqMono{i + 1, j, k, 0}, 1);
      } else {
        // a b^j c^k = q^{j+k} b^j c^k a and a d = 1 + q b c
        QScalar s = f.q_pow(j + k);
        r.add(OqMono{0, j, k, l - 1}, s);
        r.add(OqMono{0, j + 1, k + 1, l - 1}, s * f.q());
      }
      break;
    case 1:  // b a = q^-1 a b
      r.add(OqMono{i, j + 1, k, l}, f.q_pow(-i));
      break;
    case 2:  // c a = q^-1 a c, c b = b c
      r.add(OqMono{i, j, k + 1, l}, f.q_pow(-i));
      break;
    default:  // d
      if (i == 0) {
        r.add(OqMono{0, j, k, l + 1}, f.q_pow(-j - k));
      } else {
        // d a = 1 + q^-1 b c, and b c a^{i-1} = q^{-2(i-1)} a^{i-1} b c
        r.add(OqMono{i - 1, j, k, 0}, 1);
        r.add(OqMono{i - 1, j + 1, k + 1, 0}, f.q_pow(-1 - 2 * (i - 1)));
      }
  }
  return r;
}

OqElement OqSL2::mono_times(const OqMono& x, const OqElement& y) const {
  OqElement cur = y;
  for (int g = 3; g >= 0; --g)
    for (int t = 0; t < x[g]; ++t) {
      OqElement next;
      for (const auto& [m, c] : cur) next.add(left_mul(g, m), c);
      cur = std::move(next);
    }
  return cur;
}

OqElement OqSL2::multiply(const OqElement& x, const OqElement& y) const {
  OqElement out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      std::pair<OqMono, OqMono> key{mx, my};
      OqElement p;
      {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mul_cache_.find(key);
        if (it != mul_cache_.end()) p = it->second;
      }
      if (p.is_zero()) {
        p = mono_times(mx, OqElement(my));
        std::lock_guard<std::mutex> lock(mu_);
        mul_cache_.emplace(key, p);
      }
      out.add(p, cx * cy);
    }
  return out;
}

OqElement OqSL2::power(const OqElement& x, int n) const {
  if (n < 0) throw std::invalid_argument("negative power in O_q");
  OqElement r = one();
  for (int i = 0; i < n; ++i) r = multiply(r, x);
  return r;
}

OqElement OqSL2::word(const std::vector<int>& rows, const std::vector<int>& cols) const {
  OqElement cur = one();
  for (size_t t = rows.size(); t-- > 0;) {
    OqElement next;
    for (const auto& [m, c] : cur) next.add(left_mul(2 * rows[t] + cols[t], m), c);
    cur = std::move(next);
  }
  return cur;
}

void OqSL2::letters(const OqMono& m, std::vector<int>& rows, std::vector<int>& cols) {
  rows.clear();
  cols.clear();
  for (int g = 0; g < 4; ++g)
    for (int t = 0; t < m[g]; ++t) {
      rows.push_back(g / 2);
      cols.push_back(g % 2);
    }
}

OqTensor OqSL2::coproduct(const OqElement& x) const {
  OqTensor out;
  std::vector<int> rows, cols;
  for (const auto& [m, c] : x) {
    letters(m, rows, cols);
    int n = static_cast<int>(rows.size());
    // Delta(x_{I,J}) = sum_K x_{I,K} (x) x_{K,J}
    for (uint32_t K = 0; K < (1u << n); ++K) {
      std::vector<int> mid(n);
      for (int t = 0; t < n; ++t) mid[t] = (K >> t) & 1;
      OqElement left = word(rows, mid), right = word(mid, cols);
      for (const auto& [ml, cl] : left)
        for (const auto& [mr, cr] : right) out.add({ml, mr}, c * cl * cr);
    }
  }
  return out;
}

QScalar OqSL2::counit(const OqElement& x) const {
  QScalar s;
  for (const auto& [m, c] : x)
    if (m[1] == 0 && m[2] == 0) s += c;
  return s;
}

OqElement OqSL2::antipode(const OqElement& x) const {
  const QField& f = field();
  // anti-multiplicative: S(a) = d, S(b) = -q^-1 b, S(c) = -q c, S(d) = a
  std::array<OqElement, 4> img = {d(), b().scaled(-f.q_pow(-1)), c().scaled(-f.q()), a()};
  OqElement out;
  for (const auto& [m, c0] : x) {
    OqElement cur = one();
    for (int g = 0; g < 4; ++g)
      for (int t = 0; t < m[g]; ++t) cur = multiply(img[g], cur);
    out.add(cur, c0);
  }
  return out;
}

OqElement OqSL2::antipode_inverse(const OqElement& x) const {
  const QField& f = field();
  std::array<OqElement, 4> img = {d(), b().scaled(-f.q()), c().scaled(-f.q_pow(-1)), a()};
  OqElement out;
  for (const auto& [m, c0] : x) {
    OqElement cur = one();
    for (int g = 0; g < 4; ++g)
      for (int t = 0; t < m[g]; ++t) cur = multiply(img[g], cur);
    out.add(cur, c0);
  }
  return out;
}

std::map<uint32_t, QScalar> OqSL2::tensor_act(const PbwMonomial& m, int n, uint32_t J) const {
  const QField& f = field();
  std::map<uint32_t, QScalar> v{{J, QScalar(1)}};
  // bit t = 0: v_0 (K_alpha eigenvalue q), bit t = 1: v_1 (eigenvalue q^-1)
  auto signed_count = [](uint32_t mask, int from, int to) {
    int s = 0;
    for (int t = from; t < to; ++t) s += ((mask >> t) & 1) ? -1 : 1;
    return s;
  };
  auto apply = [&](bool is_e) {
    std::map<uint32_t, QScalar> next;
    for (const auto& [mask, c] : v)
      for (int t = 0; t < n; ++t) {
        bool bit = (mask >> t) & 1;
        if (is_e && bit) {
          // Delta^n(E) = sum_t K^{(x)t} (x) E (x) 1...
          QScalar s = c * f.q_pow(signed_count(mask, 0, t));
          next[mask & ~(1u << t)] += s;
        } else if (!is_e && !bit) {
          // Delta^n(F) = sum_t 1... (x) F (x) (K^-1)^{(x)(n-t-1)}
          QScalar s = c * f.q_pow(-signed_count(mask, t + 1, n));
          next[mask | (1u << t)] += s;
        }
      }
    v.clear();
    for (auto& [k, c] : next)
      if (!c.is_zero()) v.emplace(k, c);
  };
  for (int t = 0; t < m.e[0]; ++t) apply(true);
  if (!m.k.is_zero())
    for (auto& [mask, c] : v) {
      // K_{k omega} on a vector of weight w omega: q^{k w / 2}
      int w = signed_count(mask, 0, n);
      c *= f.q_pow(mpq_class(m.k[0] * w, 2));
    }
  for (int t = 0; t < m.f[0]; ++t) apply(false);
  return v;
}

QScalar OqSL2::pair(const UqElement& u, const OqElement& x) const {
  QScalar s;
  std::vector<int> rows, cols;
  for (const auto& [mx, cx] : x) {
    letters(mx, rows, cols);
    uint32_t I = 0, J = 0;
    for (size_t t = 0; t < rows.size(); ++t) {
      I |= static_cast<uint32_t>(rows[t]) << t;
      J |= static_cast<uint32_t>(cols[t]) << t;
    }
    for (const auto& [mu, cu] : u) {
      auto v = tensor_act(mu, static_cast<int>(rows.size()), J);
      auto it = v.find(I);
      if (it != v.end()) s += cx * cu * it->second;
    }
  }
  return s;
}

OqElement OqSL2::left_act(const UqElement& u, const OqElement& x) const {
  OqElement out;
  std::vector<int> rows, cols;
  for (const auto& [mx, cx] : x) {
    letters(mx, rows, cols);
    int n = static_cast<int>(rows.size());
    uint32_t J = 0;
    for (int t = 0; t < n; ++t) J |= static_cast<uint32_t>(cols[t]) << t;
    for (const auto& [mu, cu] : u)
      for (const auto& [K, val] : tensor_act(mu, n, J)) {
        std::vector<int> mid(n);
        for (int t = 0; t < n; ++t) mid[t] = (K >> t) & 1;
        out.add(word(rows, mid), cx * cu * val);
      }
  }
  return out;
}

OqElement OqSL2::right_act(const OqElement& x, const UqElement& u) const {
  OqElement out;
  std::vector<int> rows, cols;
  for (const auto& [mx, cx] : x) {
    letters(mx, rows, cols);
    int n = static_cast<int>(rows.size());
    uint32_t I = 0;
    for (int t = 0; t < n; ++t) I |= static_cast<uint32_t>(rows[t]) << t;
    for (uint32_t K = 0; K < (1u << n); ++K) {
      QScalar val;
      for (const auto& [mu, cu] : u) {
        auto v = tensor_act(mu, n, K);
        auto it = v.find(I);
        if (it != v.end()) val += cu * it->second;
      }
      if (val.is_zero()) continue;
      std::vector<int> mid(n);
      for (int t = 0; t < n; ++t) mid[t] = (K >> t) & 1;
      out.add(word(mid, cols), cx * val);
    }
  }
  return out;
}

BElement OqSL2::b_multiply(const BElement& x, const BElement& y) const {
  BElement out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y)
      // b^j a^k = q^{-jk} a^k b^j
      out.add(BMono{mx.a + my.a, mx.b + my.b}, cx * cy * field().q_pow(-mx.b * my.a));
  return out;
}

BElement OqSL2::project_B(const OqElement& x) const {
  BElement out;
  for (const auto& [m, c] : x) {
    if (m[2] > 0) continue;
    // a^i b^j d^l -> a^i b^j a^-l = q^{jl} a^{i-l} b^j
    out.add(BMono{m[0] - m[3], m[1]}, c * field().q_pow(m[1] * m[3]));
  }
  return out;
}

OqBTensor OqSL2::tensor_multiply(const OqBTensor& x, const OqBTensor& y) const {
  OqBTensor out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      OqElement l = multiply(OqElement(kx.first), OqElement(ky.first));
      BElement r = b_multiply(BElement(kx.second), BElement(ky.second));
      for (const auto& [ml, cl] : l)
        for (const auto& [mr, cr] : r) out.add({ml, mr}, cx * cy * cl * cr);
    }
  return out;
}

OqBTensor OqSL2::coact_B(const OqElement& x) const {
  // multiplicative, from a -> a(x)a, b -> a(x)b + b(x)a^-1, c -> c(x)a, d -> c(x)b + d(x)a^-1
  static const std::array<OqBTensor, 4> gens = [] {
    std::array<OqBTensor, 4> g;
    g[0].add({unit_mono(0), BMono{1, 0}}, 1);
    g[1].add({unit_mono(0), BMono{0, 1}}, 1);
    g[1].add({unit_mono(1), BMono{-1, 0}}, 1);
    g[2].add({unit_mono(2), BMono{1, 0}}, 1);
    g[3].add({unit_mono(2), BMono{0, 1}}, 1);
    g[3].add({unit_mono(3), BMono{-1, 0}}, 1);
    return g;
  }();
  OqBTensor out;
  for (const auto& [m, c] : x) {
    OqBTensor cur;
    cur.add({OqMono{}, BMono{}}, c);
    for (int g = 0; g < 4; ++g)
      for (int t = 0; t < m[g]; ++t) cur = tensor_multiply(cur, gens[g]);
    out += cur;
  }
  return out;
}

const std::vector<std::vector<OqElement>>& OqSL2::matrix_coefficients(int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = coeff_cache_.find(n);
    if (it != coeff_cache_.end()) return it->second;
  }
  if (n < 0 || n > 12) throw std::invalid_argument("matrix_coefficients: n out of range");
  // embed V_n in V_1^{(x) n}: v_0 = e_0...0, v_k = F v_{k-1}
  PbwMonomial fm;
  fm.f[0] = 1;
  std::vector<std::map<uint32_t, QScalar>> iota(n + 1);
  iota[0][0] = 1;
  for (int k = 1; k <= n; ++k)
    for (const auto& [mask, c] : iota[k - 1])
      for (const auto& [m2, c2] : tensor_act(fm, n, mask)) iota[k][m2] += c * c2;
  // left inverse: read v_i off one coordinate of its support
  std::vector<std::vector<OqElement>> x(n + 1, std::vector<OqElement>(n + 1));
  for (int i = 0; i <= n; ++i) {
    uint32_t pivot = 0;
    QScalar pc;
    for (const auto& [mask, c] : iota[i])
      if (!c.is_zero()) {
        pivot = mask;
        pc = c;
        break;
      }
    std::vector<int> rows(n);
    for (int t = 0; t < n; ++t) rows[t] = (pivot >> t) & 1;
    for (int j = 0; j <= n; ++j)
      for (const auto& [mask, c] : iota[j]) {
        if (c.is_zero()) continue;
        std::vector<int> cols(n);
        for (int t = 0; t < n; ++t) cols[t] = (mask >> t) & 1;
        x[i][j].add(word(rows, cols), c / pc);
      }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return coeff_cache_.emplace(n, std::move(x)).first->second;
}

std::string OqSL2::mono_string(const OqMono& m) {
  static const char* names = "abcd";
  std::string s;
  for (int g = 0; g < 4; ++g) {
    if (m[g] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[g];
    if (m[g] > 1) s += "^" + std::to_string(m[g]);
  }
  return s.empty() ? "1" : s;
}

std::string OqSL2::to_string(const OqElement& x) const {
  return lincomb_string<OqMono>(x, [](const OqMono& m) { return mono_string(m); });
}

std::string OqSL2::to_string(const BElement& x) const {
  return lincomb_string<BMono>(x, [](const BMono& m) {
    std::string s;
    if (m.a != 0) s += m.a == 1 ? "a" : "a^" + std::to_string(m.a);
    if (m.b != 0) s += (s.empty() ? "" : "*") + (m.b == 1 ? std::string("b") : "b^" + std::to_string(m.b));
    return s.empty() ? std::string("1") : s;
  });
}

std::string OqSL2::to_string(const OqBTensor& x) const {
  return lincomb_string<std::pair<OqMono, BMono>>(x, [this](const std::pair<OqMono, BMono>& k) {
    return "(" + mono_string(k.first) + " (x) " + to_string(BElement(k.second)) + ")";
  });
}

OqElement OqSL2::parse(const std::string& expr) const {
  using P = detail::ExprParser<OqElement>;
  P::Hooks h;
  h.multiply = [this](const OqElement& x, const OqElement& y) { return multiply(x, y); };
  h.power = [this](const OqElement& x, int n) { return power(x, n); };
  h.scalar = [this](const QScalar& s) { return one().scaled(s); };
  h.atom = [this](P::Cursor& cur, OqElement& out) {
    char ch = cur.s[cur.pos];
    if (ch >= 'a' && ch <= 'd') {
      ++cur.pos;
      out = OqElement(unit_mono(ch - 'a'));
      return true;
    }
    if (ch == 'q') {
      ++cur.pos;
      out = one().scaled(field().q());
      return true;
    }
    if (ch == 'v') {
      ++cur.pos;
      out = one().scaled(QScalar::vpow(1));
      return true;
    }
    return false;
  };
  return P(h, expr).parse();
}

}  // namespace qflag
