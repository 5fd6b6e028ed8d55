#include "qflag/uq_algebra.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "qflag/linalg.hpp"

namespace qflag {

const UqAlgebra& UqAlgebra::get(CartanType t) {
  static const UqAlgebra a1(RootDatum::get(CartanType::A1));
  static const UqAlgebra a2(RootDatum::get(CartanType::A2));
  return t == CartanType::A1 ? a1 : a2;
}

const char* UqAlgebra::hopf_convention() {
  return "Delta(E_i)=E_i(x)1+K_i(x)E_i; Delta(F_i)=F_i(x)K_i^-1+1(x)F_i; Delta(K)=K(x)K; "
         "S(E_i)=-K_i^-1E_i; S(F_i)=-F_iK_i; S(K_mu)=K_-mu; K_i=K_{alpha_i}";
}

const char* UqAlgebra::grading_convention() {
  return "deg E_beta = deg F_beta = ht(beta); deg K_mu = -(sum of omega-coordinates of mu)";
}

UqAlgebra::UqAlgebra(const RootDatum& rd) : rd_(rd), nroots_(rd.num_positive_roots()) {
  roots_ = rd.positive_roots();
  build_tables();
}

void UqAlgebra::build_tables() {
  const QField& f = field();
  QScalar q = f.q(), qi = f.q_pow(-1), d = f.q_diff_inv();
  swap_.assign(nroots_, std::vector<std::vector<std::pair<QScalar, RootExps>>>(nroots_));
  comm_.assign(nroots_, std::vector<UqElement>(nroots_));
  auto cartan = [&](const Weight& b, const QScalar& c) { return (K(b) - K(-b)).scaled(c * d); };
  auto mono = [](RootExps fa, Weight k, RootExps ea) { return PbwMonomial{fa, k, ea}; };
  if (rd_.type() == CartanType::A1) {
    comm_[0][0] = cartan(roots_[0], 1);
    return;
  }
  // roots: 0 = alpha_1, 1 = alpha_1 + alpha_2, 2 = alpha_2; E_12 = E_1 E_2 - q^-1 E_2 E_1
  const Weight a1 = roots_[0], th = roots_[1], a2 = roots_[2];
  swap_[1][0] = {{qi, RootExps{1, 1, 0}}};
  swap_[2][0] = {{q, RootExps{1, 0, 1}}, {-q, RootExps{0, 1, 0}}};
  swap_[2][1] = {{qi, RootExps{0, 1, 1}}};
  comm_[0][0] = cartan(a1, 1);
  comm_[2][2] = cartan(a2, 1);
  comm_[1][1] = cartan(th, -qi);
  comm_[0][1] = UqElement(mono({0, 0, 1}, a1, {}));
  comm_[2][1] = UqElement(mono({1, 0, 0}, -a2, {}), -qi);
  comm_[1][0] = UqElement(mono({}, -a1, {0, 0, 1}), -qi);
  comm_[1][2] = UqElement(mono({}, a2, {1, 0, 0}));
}

UqElement UqAlgebra::K(const Weight& mu) const { return UqElement(PbwMonomial{{}, mu, {}}); }

UqElement UqAlgebra::root_E(int r) const {
  PbwMonomial m;
  m.e[r] = 1;
  return UqElement(m);
}

UqElement UqAlgebra::root_F(int r) const {
  PbwMonomial m;
  m.f[r] = 1;
  return UqElement(m);
}

UqElement UqAlgebra::generator(const Generator& g) const {
  switch (g.kind) {
    case Generator::Kind::E:
      return root_E(g.root);
    case Generator::Kind::F:
      return root_F(g.root);
    default:
      return K(g.mu);
  }
}

UqAlgebra::Ordered UqAlgebra::left_mul_ordered(int r, const RootExps& a) const {
  int first = 0;
  while (first < nroots_ && a[first] == 0) ++first;
  if (first >= r) {
    RootExps b = a;
    ++b[r];
    return Ordered(b);
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ordered_cache_.find({r, a});
    if (it != ordered_cache_.end()) return it->second;
  }
  RootExps rest = a;
  --rest[first];
  Ordered rest_el(rest);
  Ordered out;
  for (const auto& [c, m] : swap_[r][first]) out.add(mul_ordered(m, rest_el), c);
  std::lock_guard<std::mutex> lock(mu_);
  ordered_cache_.emplace(std::make_pair(r, a), out);
  return out;
}

UqAlgebra::Ordered UqAlgebra::mul_ordered(const RootExps& m, const Ordered& y) const {
  Ordered cur = y;
  for (int r = nroots_ - 1; r >= 0; --r)
    for (int k = 0; k < m[r]; ++k) {
      Ordered next;
      for (const auto& [a, c] : cur) next.add(left_mul_ordered(r, a), c);
      cur = std::move(next);
    }
  return cur;
}

UqElement UqAlgebra::left_mul_E(int r, const PbwMonomial& m) const {
  int t = 0;
  while (t < nroots_ && m.f[t] == 0) ++t;
  UqElement out;
  if (t == nroots_) {
    QScalar c = field().q_pow(-rd_.pairing(m.k, roots_[r]));
    for (const auto& [b, d] : left_mul_ordered(r, m.e)) out.add(PbwMonomial{m.f, m.k, b}, c * d);
    return out;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = e_cache_.find({r, m});
    if (it != e_cache_.end()) return it->second;
  }
  // E_r F_t T = F_t (E_r T) + [E_r, F_t] T
  PbwMonomial rest = m;
  --rest.f[t];
  UqElement rest_el(rest);
  out = left_mul(Generator::F(t), left_mul_E(r, rest));
  out += multiply(comm_[r][t], rest_el);
  std::lock_guard<std::mutex> lock(mu_);
  e_cache_.emplace(std::make_pair(r, m), out);
  return out;
}

UqElement UqAlgebra::left_mul_mono(const Generator& g, const PbwMonomial& m) const {
  switch (g.kind) {
    case Generator::Kind::F: {
      UqElement out;
      for (const auto& [a, c] : left_mul_ordered(g.root, m.f)) out.add(PbwMonomial{a, m.k, m.e}, c);
      return out;
    }
    case Generator::Kind::K: {
      PbwMonomial n = m;
      n.k = m.k + g.mu;
      Weight wf;
      for (int r = 0; r < nroots_; ++r) wf = wf - roots_[r] * m.f[r];
      return UqElement(n, field().q_pow(rd_.pairing(g.mu, wf)));
    }
    default:
      return left_mul_E(g.root, m);
  }
}

UqElement UqAlgebra::left_mul(const Generator& g, const UqElement& y) const {
  UqElement out;
  for (const auto& [m, c] : y) out.add(left_mul_mono(g, m), c);
  return out;
}

Word UqAlgebra::monomial_word(const PbwMonomial& m) const {
  Word w;
  for (int r = 0; r < nroots_; ++r)
    for (int k = 0; k < m.f[r]; ++k) w.push_back(Generator::F(r));
  if (!m.k.is_zero()) w.push_back(Generator::K(m.k));
  for (int r = 0; r < nroots_; ++r)
    for (int k = 0; k < m.e[r]; ++k) w.push_back(Generator::E(r));
  return w;
}

UqElement UqAlgebra::mono_multiply(const PbwMonomial& a, const PbwMonomial& b) const {
  if (a == PbwMonomial{}) return UqElement(b);
  if (b == PbwMonomial{}) return UqElement(a);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mono_cache_.find({a, b});
    if (it != mono_cache_.end()) return it->second;
  }
  UqElement cur(b);
  Word w = monomial_word(a);
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = left_mul(*it, cur);
  std::lock_guard<std::mutex> lock(mu_);
  mono_cache_.emplace(std::make_pair(a, b), cur);
  return cur;
}

UqElement UqAlgebra::multiply(const UqElement& x, const UqElement& y) const {
  UqElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(mono_multiply(a, b), ca * cb);
  return out;
}

UqElement UqAlgebra::power(const UqElement& x, int n) const {
  UqElement r = one();
  for (int i = 0; i < n; ++i) r = multiply(r, x);
  return r;
}

UqElement UqAlgebra::commutator(const UqElement& x, const UqElement& y) const {
  return multiply(x, y) - multiply(y, x);
}

UqElement UqAlgebra::normal_form(const Word& w) const {
  UqElement cur = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = left_mul(*it, cur);
  return cur;
}

UqElement UqAlgebra::normal_form(const std::vector<std::pair<QScalar, Word>>& sum) const {
  UqElement out;
  for (const auto& [c, w] : sum) out.add(normal_form(w), c);
  return out;
}

UqTensor UqAlgebra::coproduct_generator(const Generator& g) const {
  using Key = std::array<PbwMonomial, 2>;
  PbwMonomial one_m{};
  if (g.kind == Generator::Kind::K) return UqTensor(Key{PbwMonomial{{}, g.mu, {}}, PbwMonomial{{}, g.mu, {}}});
  int simple = rd_.root_simple_index(g.root);
  if (simple < 0) {
    // composite root vector: X_12 = X_1 X_2 - q^-1 X_2 X_1 (same shape for E and F)
    int r1 = rd_.simple_root_index(0), r2 = rd_.simple_root_index(1);
    Generator g1{g.kind, r1, {}}, g2{g.kind, r2, {}};
    UqTensor d1 = coproduct_generator(g1), d2 = coproduct_generator(g2);
    UqTensor out = tensor_multiply(d1, d2);
    out.add(tensor_multiply(d2, d1), -field().q_pow(-1));
    return out;
  }
  const Weight& a = roots_[g.root];
  PbwMonomial x = g.kind == Generator::Kind::E ? root_E(g.root).begin()->first : root_F(g.root).begin()->first;
  UqTensor out;
  if (g.kind == Generator::Kind::E) {
    out.add(Key{x, one_m}, 1);
    out.add(Key{PbwMonomial{{}, a, {}}, x}, 1);
  } else {
    out.add(Key{x, PbwMonomial{{}, -a, {}}}, 1);
    out.add(Key{one_m, x}, 1);
  }
  return out;
}

UqTensor UqAlgebra::coproduct_mono(const PbwMonomial& m) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = delta_cache_.find(m);
    if (it != delta_cache_.end()) return it->second;
  }
  UqTensor cur(std::array<PbwMonomial, 2>{});
  for (const auto& g : monomial_word(m)) cur = tensor_multiply(cur, coproduct_generator(g));
  std::lock_guard<std::mutex> lock(mu_);
  delta_cache_.emplace(m, cur);
  return cur;
}

UqTensor UqAlgebra::coproduct(const UqElement& x) const {
  UqTensor out;
  for (const auto& [m, c] : x) out.add(coproduct_mono(m), c);
  return out;
}

UqTensor UqAlgebra::tensor_multiply(const UqTensor& x, const UqTensor& y) const {
  return tensor_multiply_n<2>(x, y);
}

UqElement UqAlgebra::antipode_generator(const Generator& g) const {
  if (g.kind == Generator::Kind::K) return K(-g.mu);
  int simple = rd_.root_simple_index(g.root);
  if (simple < 0) {
    int r1 = rd_.simple_root_index(0), r2 = rd_.simple_root_index(1);
    UqElement s1 = antipode_generator({g.kind, r1, {}}), s2 = antipode_generator({g.kind, r2, {}});
    UqElement out = multiply(s2, s1);
    out.add(multiply(s1, s2), -field().q_pow(-1));
    return out;
  }
  const Weight& a = roots_[g.root];
  if (g.kind == Generator::Kind::E) return multiply(K(-a), root_E(g.root)).scaled(-1);
  return multiply(root_F(g.root), K(a)).scaled(-1);
}

UqElement UqAlgebra::antipode_mono(const PbwMonomial& m) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = antipode_cache_.find(m);
    if (it != antipode_cache_.end()) return it->second;
  }
  UqElement cur = one();
  for (const auto& g : monomial_word(m)) cur = multiply(antipode_generator(g), cur);
  std::lock_guard<std::mutex> lock(mu_);
  antipode_cache_.emplace(m, cur);
  return cur;
}

UqElement UqAlgebra::antipode(const UqElement& x) const {
  UqElement out;
  for (const auto& [m, c] : x) out.add(antipode_mono(m), c);
  return out;
}

QScalar UqAlgebra::counit(const UqElement& x) const {
  QScalar s;
  for (const auto& [m, c] : x)
    if (m.f == RootExps{} && m.e == RootExps{}) s += c;
  return s;
}

UqElement UqAlgebra::adjoint_act(const UqElement& u, const UqElement& v) const {
  UqElement out;
  for (const auto& [k, c] : coproduct(u))
    out.add(multiply(multiply(UqElement(k[0]), v), antipode(UqElement(k[1]))), c);
  return out;
}

UqElement UqAlgebra::tau(const UqElement& x) const {
  auto tau_gen = [&](const Generator& g) -> UqElement {
    if (g.kind == Generator::Kind::K) return K(g.mu);
    Generator::Kind other = g.kind == Generator::Kind::E ? Generator::Kind::F : Generator::Kind::E;
    if (rd_.root_simple_index(g.root) >= 0) return generator({other, g.root, {}});
    // tau(X_1 X_2 - q^-1 X_2 X_1) = Y_2 Y_1 - q^-1 Y_1 Y_2
    UqElement y1 = generator({other, rd_.simple_root_index(0), {}});
    UqElement y2 = generator({other, rd_.simple_root_index(1), {}});
    UqElement out = multiply(y2, y1);
    out.add(multiply(y1, y2), -field().q_pow(-1));
    return out;
  };
  UqElement out;
  for (const auto& [m, c] : x) {
    UqElement cur = one();
    for (const auto& g : monomial_word(m)) cur = multiply(tau_gen(g), cur);
    out.add(cur, c);
  }
  return out;
}

Weight UqAlgebra::weight(const PbwMonomial& m) const {
  Weight w;
  for (int r = 0; r < nroots_; ++r) w = w + roots_[r] * (m.e[r] - m.f[r]);
  return w;
}

bool UqAlgebra::is_homogeneous(const UqElement& x, Weight* w) const {
  bool first = true;
  Weight wt;
  for (const auto& [m, c] : x) {
    Weight mw = weight(m);
    if (first) {
      wt = mw;
      first = false;
    } else if (mw != wt) {
      return false;
    }
  }
  if (w) *w = wt;
  return true;
}

int UqAlgebra::monomial_degree(const PbwMonomial& m) const {
  int d = 0;
  for (int r = 0; r < nroots_; ++r) d += (m.f[r] + m.e[r]) * rd_.root_height(r);
  for (int i = 0; i < rd_.rank(); ++i) d -= m.k[i];
  return d;
}

int UqAlgebra::filtration_degree(const UqElement& x) const {
  if (x.is_zero()) throw std::domain_error("filtration_degree: degree of 0 is undefined");
  int d = std::numeric_limits<int>::min();
  for (const auto& [m, c] : x) d = std::max(d, monomial_degree(m));
  return d;
}

namespace {

// all exponent vectors over nroots roots with weighted size exactly n
void enumerate_exps(int nroots, const std::vector<int>& heights, int n, int idx, RootExps& cur,
                    std::vector<RootExps>& out) {
  if (idx == nroots) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int k = 0; k * heights[idx] <= n; ++k) {
    cur[idx] = static_cast<uint8_t>(k);
    enumerate_exps(nroots, heights, n - k * heights[idx], idx + 1, cur, out);
  }
  cur[idx] = 0;
}

}  // namespace

long UqAlgebra::graded_piece_dim(int j, int k_window) const {
  std::vector<int> heights;
  for (int r = 0; r < nroots_; ++r) heights.push_back(rd_.root_height(r));
  auto count_exps = [&](int n) {
    std::vector<RootExps> v;
    RootExps cur{};
    if (n >= 0) enumerate_exps(nroots_, heights, n, 0, cur, v);
    return static_cast<long>(v.size());
  };
  long total = 0;
  int k1max = rd_.rank() > 1 ? k_window : 0;
  for (int k0 = -k_window; k0 <= k_window; ++k0)
    for (int k1 = -k1max; k1 <= k1max; ++k1) {
      int ef = j + k0 + k1;  // weighted size of F-part plus E-part
      for (int fa = 0; fa <= ef; ++fa) total += count_exps(fa) * count_exps(ef - fa);
    }
  return total;
}

std::pair<int, bool> UqAlgebra::ad_orbit_probe(const UqElement& v, int cutoff) const {
  if (cutoff < 1) throw std::invalid_argument("ad_orbit_probe: cutoff must be >= 1");
  std::vector<int> heights;
  for (int r = 0; r < nroots_; ++r) heights.push_back(rd_.root_height(r));
  auto span_dim = [&](int cut) {
    std::vector<UqElement> vecs;
    for (int n = 0; n <= cut; ++n)
      for (int fa = 0; fa <= n; ++fa) {
        std::vector<RootExps> fs, es;
        RootExps cur{};
        enumerate_exps(nroots_, heights, fa, 0, cur, fs);
        enumerate_exps(nroots_, heights, n - fa, 0, cur, es);
        for (const auto& e : es) {
          UqElement w = adjoint_act(UqElement(PbwMonomial{{}, {}, e}), v);
          for (const auto& f : fs) {
            UqElement x = adjoint_act(UqElement(PbwMonomial{f, {}, {}}), w);
            // split into weight components
            std::map<Weight, UqElement> parts;
            for (const auto& [m, c] : x) parts[weight(m)].add(m, c);
            for (auto& [wt, p] : parts) vecs.push_back(std::move(p));
          }
        }
      }
    std::map<PbwMonomial, size_t> index;
    for (const auto& x : vecs)
      for (const auto& [m, c] : x) index.emplace(m, index.size());
    Matrix mat(vecs.size(), index.size());
    for (size_t i = 0; i < vecs.size(); ++i)
      for (const auto& [m, c] : vecs[i]) mat.at(i, index[m]) = c;
    return static_cast<int>(rank(mat));
  };
  int d = span_dim(cutoff);
  int prev = span_dim(cutoff - 1);
  return {d, d == prev};
}

std::string UqAlgebra::monomial_string(const PbwMonomial& m) const {
  auto root_name = [&](int r) {
    if (rd_.rank() == 1) return std::string();
    int s = rd_.root_simple_index(r);
    return s >= 0 ? std::to_string(s + 1) : std::string("12");
  };
  std::string s;
  auto append = [&](const std::string& t) { s += (s.empty() ? "" : "*") + t; };
  for (int r = 0; r < nroots_; ++r)
    if (m.f[r]) append("F" + root_name(r) + (m.f[r] > 1 ? "^" + std::to_string(m.f[r]) : ""));
  if (!m.k.is_zero()) {
    std::string k = "K(";
    for (int i = 0; i < rd_.rank(); ++i) k += (i ? "," : "") + std::to_string(m.k[i]);
    append(k + ")");
  }
  for (int r = 0; r < nroots_; ++r)
    if (m.e[r]) append("E" + root_name(r) + (m.e[r] > 1 ? "^" + std::to_string(m.e[r]) : ""));
  return s.empty() ? "1" : s;
}

std::string UqAlgebra::to_string(const UqElement& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : x) {
    if (!s.empty()) s += " + ";
    std::string ms = monomial_string(m);
    if (c.is_one())
      s += ms;
    else if (ms == "1")
      s += "[" + c.to_string() + "]";
    else
      s += "[" + c.to_string() + "]*" + ms;
  }
  return s;
}

namespace {

class ExprParser {
 public:
  ExprParser(const UqAlgebra& U, const std::string& s) : U_(U), s_(s) {}

  UqElement parse() {
    UqElement r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("expression '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  UqElement expr() {
    UqElement r;
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  UqElement term() {
    UqElement r = factor();
    while (eat('*')) r = U_.multiply(r, factor());
    return r;
  }
  int integer() {
    skip();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  UqElement factor() {
    UqElement base = atom();
    if (eat('^')) base = U_.power(base, integer());
    return base;
  }
  UqElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      UqElement r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '[') {
      size_t close = s_.find(']', pos_);
      if (close == std::string::npos) fail("unterminated '['");
      QScalar v = QScalar::parse(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return U_.scalar(v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return U_.scalar(integer());
    if (c == 'q') {
      ++pos_;
      return U_.scalar(U_.field().q());
    }
    if (c == 'v') {
      ++pos_;
      return U_.scalar(QScalar::vpow(1));
    }
    if (c == 'K') {
      ++pos_;
      if (!eat('(')) fail("expected '(' after K");
      Weight w;
      const RootDatum& rd = U_.datum();
      for (int i = 0; i < rd.rank(); ++i) {
        if (i > 0 && !eat(',')) fail("expected ','");
        w[i] = integer();
      }
      if (!eat(')')) fail("expected ')'");
      return U_.K(w);
    }
    if (c == 'E' || c == 'F') {
      ++pos_;
      const RootDatum& rd = U_.datum();
      int root;
      if (s_.compare(pos_, 2, "12") == 0 && rd.rank() == 2) {
        pos_ += 2;
        root = 1;
      } else if (pos_ < s_.size() && (s_[pos_] == '1' || s_[pos_] == '2')) {
        int i = s_[pos_++] - '1';
        if (i >= rd.rank()) fail("generator index out of range");
        root = rd.simple_root_index(i);
      } else {
        if (rd.rank() != 1) fail("generator index required");
        root = 0;
      }
      return c == 'E' ? U_.root_E(root) : U_.root_F(root);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const UqAlgebra& U_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

UqElement UqAlgebra::parse(const std::string& expr) const { return ExprParser(*this, expr).parse(); }

}  // namespace qflag
