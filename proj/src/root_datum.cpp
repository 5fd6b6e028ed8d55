#include "qflag/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace qflag {

std::string to_string(CartanType t) { return t == CartanType::A1 ? "A1" : "A2"; }

CartanType parse_cartan_type(const std::string& s) {
  if (s == "A1") return CartanType::A1;
  if (s == "A2") return CartanType::A2;
  throw std::invalid_argument("unknown root datum '" + s + "' (expected A1 or A2)");
}

std::string to_string(const Weight& w, int rank) {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

WeightCharacter WeightCharacter::formal(std::vector<QScalar> values) {
  for (const auto& v : values)
    if (v.is_zero()) throw std::invalid_argument("formal character values must be nonzero");
  return WeightCharacter(Formal{std::move(values)});
}

QScalar WeightCharacter::value(const RootDatum& rd, const Weight& nu) const {
  if (is_integral()) return rd.field().q_pow(rd.pairing(mu(), nu));
  QScalar r(1);
  for (int i = 0; i < rd.rank(); ++i)
    if (nu[i] != 0) r *= values()[i].pow(nu[i]);
  return r;
}

WeightCharacter WeightCharacter::shifted(const RootDatum& rd, const Weight& nu) const {
  if (is_integral()) return integral(mu() + nu);
  std::vector<QScalar> v = values();
  for (int i = 0; i < rd.rank(); ++i) v[i] *= rd.field().q_pow(rd.pairing(nu, rd.omega(i)));
  return formal(std::move(v));
}

WeightCharacter WeightCharacter::negated() const {
  if (is_integral()) return integral(-mu());
  std::vector<QScalar> v;
  for (const auto& x : values()) v.push_back(x.inverse());
  return formal(std::move(v));
}

std::vector<QScalar> WeightCharacter::omega_values(const RootDatum& rd) const {
  if (!is_integral()) return values();
  std::vector<QScalar> v;
  for (int i = 0; i < rd.rank(); ++i) v.push_back(value(rd, rd.omega(i)));
  return v;
}

std::string WeightCharacter::to_string(const RootDatum& rd) const {
  if (is_integral()) return "q^" + qflag::to_string(mu(), rd.rank());
  std::string s = "formal(";
  for (size_t i = 0; i < values().size(); ++i) s += (i ? "," : "") + values()[i].to_string();
  return s + ")";
}

const RootDatum& RootDatum::get(CartanType t) {
  static const RootDatum a1(CartanType::A1);
  static const RootDatum a2(CartanType::A2);
  return t == CartanType::A1 ? a1 : a2;
}

RootDatum::RootDatum(CartanType t)
    : type_(t), rank_(t == CartanType::A1 ? 1 : 2), field_(t == CartanType::A1 ? 4 : 6) {
  if (t == CartanType::A1) {
    cartan_[0][0] = 2;
    gram_[0][0] = mpq_class(1, 2);
    simple_roots_ = {Weight(2)};
    positive_roots_ = {Weight(2)};
    simple_to_root_ = {0};
    root_heights_ = {1};
  } else {
    cartan_[0][0] = cartan_[1][1] = 2;
    cartan_[0][1] = cartan_[1][0] = -1;
    gram_[0][0] = gram_[1][1] = mpq_class(2, 3);
    gram_[0][1] = gram_[1][0] = mpq_class(1, 3);
    simple_roots_ = {Weight(2, -1), Weight(-1, 2)};
    // PBW order alpha_1 < alpha_1 + alpha_2 < alpha_2
    positive_roots_ = {Weight(2, -1), Weight(1, 1), Weight(-1, 2)};
    simple_to_root_ = {0, 2};
    root_heights_ = {1, 2, 1};
  }

  // Weyl group by breadth-first closure; BFS order yields reduced words.
  WeylElement id;
  for (int i = 0; i < rank_; ++i) id.matrix[i][i] = 1;
  weyl_.push_back(id);
  std::deque<size_t> todo{0};
  while (!todo.empty()) {
    WeylElement cur = weyl_[todo.front()];
    todo.pop_front();
    for (int i = 0; i < rank_; ++i) {
      WeylElement next;
      next.word = cur.word;
      next.word.insert(next.word.begin(), i);  // s_i * cur
      for (int col = 0; col < rank_; ++col) {
        Weight e;
        for (int r = 0; r < rank_; ++r) e[r] = cur.matrix[r][col];
        Weight img = reflect(i, e);
        for (int r = 0; r < rank_; ++r) next.matrix[r][col] = img[r];
      }
      bool seen = std::any_of(weyl_.begin(), weyl_.end(),
                              [&](const WeylElement& w) { return w.matrix == next.matrix; });
      if (!seen) {
        weyl_.push_back(next);
        todo.push_back(weyl_.size() - 1);
      }
    }
  }
}

Weight RootDatum::omega(int i) const {
  Weight w;
  w[i] = 1;
  return w;
}

Weight RootDatum::rho() const { return rank_ == 1 ? Weight(1) : Weight(1, 1); }

int RootDatum::root_simple_index(int r) const {
  for (int i = 0; i < rank_; ++i)
    if (simple_to_root_[i] == r) return i;
  return -1;
}

mpq_class RootDatum::pairing(const Weight& a, const Weight& b) const {
  mpq_class s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a[i] != 0 && b[j] != 0) s += gram_[i][j] * a[i] * b[j];
  return s;
}

std::array<mpq_class, kMaxRank> RootDatum::root_coordinates(const Weight& mu) const {
  // c = C^{-1} mu, and C^{-1} = gram for simply laced types
  std::array<mpq_class, kMaxRank> c{};
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += gram_[i][j] * mu[j];
  return c;
}

bool RootDatum::in_root_lattice(const Weight& mu) const {
  auto c = root_coordinates(mu);
  for (int i = 0; i < rank_; ++i)
    if (c[i].get_den() != 1) return false;
  return true;
}

int RootDatum::height(const Weight& mu) const {
  auto c = root_coordinates(mu);
  int h = 0;
  for (int i = 0; i < rank_; ++i) {
    if (c[i].get_den() != 1) throw std::domain_error("height: weight not in the root lattice");
    h += static_cast<int>(c[i].get_num().get_si());
  }
  return h;
}

bool RootDatum::in_positive_cone(const Weight& mu) const {
  auto c = root_coordinates(mu);
  for (int i = 0; i < rank_; ++i)
    if (c[i].get_den() != 1 || c[i] < 0) return false;
  return true;
}

Weight RootDatum::from_root_coordinates(int a, int b) const {
  Weight w = simple_roots_[0] * a;
  if (rank_ > 1) w = w + simple_roots_[1] * b;
  return w;
}

const WeylElement& RootDatum::longest_element() const {
  return *std::max_element(weyl_.begin(), weyl_.end(), [](const WeylElement& x, const WeylElement& y) {
    return x.word.size() < y.word.size();
  });
}

Weight RootDatum::reflect(int i, const Weight& mu) const { return mu - simple_roots_[i] * mu[i]; }

Weight RootDatum::weyl_act(const WeylElement& w, const Weight& mu) const {
  Weight r = mu;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = reflect(*it, r);
  return r;
}

WeylElement RootDatum::inverse(const WeylElement& w) const {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  for (const auto& x : weyl_) {
    Weight probe0 = weyl_act(x, omega(0));
    WeylElement tmp;
    tmp.word = rev;
    bool same = weyl_act(tmp, omega(0)) == probe0;
    if (rank_ > 1) same = same && weyl_act(tmp, omega(1)) == weyl_act(x, omega(1));
    if (same) return x;
  }
  throw std::logic_error("Weyl inverse not found");
}

WeightCharacter RootDatum::weyl_act(const WeylElement& w, const WeightCharacter& lambda) const {
  if (lambda.is_integral()) return WeightCharacter::integral(weyl_act(w, lambda.mu()));
  // (w lambda)(gamma) = lambda(w^{-1} gamma)
  WeylElement winv = inverse(w);
  std::vector<QScalar> v;
  for (int i = 0; i < rank_; ++i) v.push_back(lambda.value(*this, weyl_act(winv, omega(i))));
  return WeightCharacter::formal(std::move(v));
}

bool RootDatum::is_dominant_classical(const Weight& mu) const {
  for (int i = 0; i < rank_; ++i)
    if (mu[i] < 0) return false;
  return true;
}

long RootDatum::weyl_dim(const Weight& lambda) const {
  if (!is_dominant_classical(lambda)) throw std::domain_error("weyl_dim: weight is not dominant");
  mpq_class d = 1;
  Weight lr = lambda + rho();
  for (const auto& beta : positive_roots_) d *= pairing(lr, beta) / pairing(rho(), beta);
  return d.get_num().get_si();
}

long RootDatum::kostant_partition(const Weight& beta) const {
  if (!in_positive_cone(beta)) return 0;
  if (rank_ == 1) return 1;
  // A2: choose the multiplicity k of alpha_1 + alpha_2, the rest is forced
  auto c = root_coordinates(beta);
  long a = c[0].get_num().get_si(), b = c[1].get_num().get_si();
  return std::min(a, b) + 1;
}

std::vector<std::pair<Weight, int>> RootDatum::character(const Weight& lambda) const {
  if (!is_dominant_classical(lambda)) throw std::domain_error("character: weight is not dominant");
  // Freudenthal's formula, working down by height below lambda.
  std::map<Weight, int> mult;
  mult[lambda] = 1;
  Weight lowest = weyl_act(longest_element(), lambda);
  int depth = height(lambda - lowest);
  Weight lr = lambda + rho();
  mpq_class lrn = pairing(lr, lr);
  std::vector<std::vector<Weight>> layers(depth + 1);
  layers[0] = {lambda};
  for (int h = 1; h <= depth; ++h) {
    // candidates: lambda minus elements of Q_+ of height h
    for (int a = 0; a <= h; ++a) {
      Weight mu = lambda - from_root_coordinates(a, h - a);
      if (rank_ == 1 && a != h) continue;
      mpq_class denom = lrn - pairing(mu + rho(), mu + rho());
      if (denom == 0) continue;
      mpq_class sum = 0;
      for (const auto& beta : positive_roots_) {
        for (int k = 1;; ++k) {
          Weight nu = mu + beta * k;
          if (!in_positive_cone(lambda - nu)) break;
          auto it = mult.find(nu);
          if (it != mult.end()) sum += pairing(nu, beta) * it->second;
        }
      }
      mpq_class m = 2 * sum / denom;
      if (m != 0) {
        mult[mu] = static_cast<int>(m.get_num().get_si());
        layers[h].push_back(mu);
      }
    }
  }
  std::vector<std::pair<Weight, int>> out;
  for (int h = 0; h <= depth; ++h)
    for (const auto& w : layers[h]) out.push_back({w, mult[w]});
  return out;
}

}  // namespace qflag
