#include "qflag/dq.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "expr_parser.hpp"
#include "format.hpp"

namespace qflag {

namespace {

const OqSL2& O() { return OqSL2::get(); }
const UqAlgebra& U() { return OqSL2::get().uq(); }

// (1 (x) u)(y (x) 1) = u_1(y) (x) u_2 for a PBW monomial u and an O_q monomial y
const DqElement& straighten(const PbwMonomial& u, const OqMono& y) {
  static std::mutex mu;
  static std::map<std::pair<PbwMonomial, OqMono>, DqElement> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({u, y});
    if (it != cache.end()) return it->second;
  }
  DqElement out;
  for (const auto& [k, c] : U().coproduct(UqElement(u)))
    for (const auto& [m, d] : O().left_act(UqElement(k[0]), OqElement(y))) out.add({m, k[1]}, c * d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::pair{u, y}, std::move(out)).first->second;
}

}  // namespace

DqElement dq_pure(const OqElement& x, const UqElement& u) {
  DqElement out;
  for (const auto& [m, c] : x)
    for (const auto& [p, d] : u) out.add({m, p}, c * d);
  return out;
}

DqElement dq_multiply(const DqElement& x, const DqElement& y) {
  DqElement out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y)
      for (const auto& [ks, cs] : straighten(kx.second, ky.first)) {
        OqElement left = O().multiply(OqElement(kx.first), OqElement(ks.first));
        UqElement right = U().mono_multiply(ks.second, ky.second);
        for (const auto& [m, c] : left)
          for (const auto& [p, d] : right) out.add({m, p}, cx * cy * cs * c * d);
      }
  return out;
}

int dq_filtration_degree(const DqElement& x) {
  if (x.is_zero()) throw std::domain_error("dq_filtration_degree: degree of 0 is undefined");
  int d = std::numeric_limits<int>::min();
  for (const auto& [k, c] : x) d = std::max(d, U().monomial_degree(k.second));
  return d;
}

DqElement dq_equivariant_act(const UqElement& u, const DqElement& x) {
  for (const auto& [p, c] : u)
    for (auto f : p.f)
      if (f != 0) throw std::invalid_argument("dq_equivariant_act: u must lie in U_q(b)");
  DqElement out;
  for (const auto& [k, c] : U().coproduct(u))
    for (const auto& [kx, cx] : x) {
      OqElement left = O().left_act(UqElement(k[0]), OqElement(kx.first));
      UqElement right = U().adjoint_act(UqElement(k[1]), UqElement(kx.second));
      for (const auto& [m, d] : left)
        for (const auto& [p, e] : right) out.add({m, p}, c * cx * d * e);
    }
  return out;
}

DlambdaClass dlambda_reduce(const DqElement& x, const WeightCharacter& lambda) {
  const RootDatum& rd = U().datum();
  DlambdaClass out;
  for (const auto& [k, c] : x) {
    bool has_e = false;
    for (auto e : k.second.e) has_e = has_e || e != 0;
    if (has_e) continue;
    out.add({k.first, k.second.f}, c * lambda.value(rd, k.second.k));
  }
  return out;
}

std::vector<Weight> graded_verma_weights(const UqAlgebra& U, const WeightCharacter& lambda, int j) {
  const RootDatum& rd = U.datum();
  const QField& F = rd.field();
  VermaModule M(U, lambda, j);
  std::vector<Weight> out;
  for (const auto& [offset, monos] : M.weight_spaces())
    for (const auto& a : monos) {
      PbwMonomial p;
      p.f = a;
      if (U.monomial_degree(p) != j) continue;
      ModuleVector v(a);
      // E lowers the filtration, so it acts by 0 on gr_j
      for (int i = 0; i < rd.rank(); ++i)
        for (const auto& [b, c] : M.act(U.E(i), v)) {
          PbwMonomial pb;
          pb.f = b;
          if (U.monomial_degree(pb) >= j) throw std::logic_error("graded_verma_weights: E does not lower degree");
        }
      // torus weight after twisting by k_{-lambda}: K_{alpha_i} eigenvalue over lambda(K_{alpha_i})
      Weight w;
      for (int i = 0; i < rd.rank(); ++i) {
        ModuleVector kv = M.act(U.K(rd.simple_root(i)), v);
        QScalar ratio = kv.coeff(a) / lambda.value(rd, rd.simple_root(i));
        bool found = false;
        for (int e = -2 * j - 2; e <= 2 * j + 2 && !found; ++e)
          if (ratio == F.q_pow(e)) {
            w[i] = e;
            found = true;
          }
        if (!found) throw std::logic_error("graded_verma_weights: K does not act by a torus weight");
      }
      out.push_back(w);
    }
  return out;
}

long gamma_dlambda_graded_dim(const UqAlgebra& U, const WeightCharacter& lambda, int j) {
  const RootDatum& rd = U.datum();
  auto weights = graded_verma_weights(U, lambda, j);
  if (rd.type() == CartanType::A1) {
    BModule V;
    int reach = 0;
    for (const auto& w : weights) {
      V.weights.push_back(w[0]);
      reach = std::max(reach, std::abs(w[0]));
    }
    size_t n = V.weights.size();
    V.coaction.assign(n, std::vector<BElement>(n));
    for (size_t s = 0; s < n; ++s) V.coaction[s][s] = BElement(BMono{V.weights[s], 0});
    auto r = induction(V, reach + 2);
    if (!r.certified) throw std::logic_error("gamma_dlambda_graded_dim: " + r.warning);
    return r.dim;
  }
  // Ind(k_w) = V_{-w} when -w is dominant, 0 otherwise
  long dim = 0;
  for (const auto& w : weights)
    if (rd.is_dominant_classical(-w)) dim += rd.weyl_dim(-w);
  return dim;
}

std::string to_string(const DqElement& x) {
  return detail::lincomb_string<DqKey>(x, [](const DqKey& k) {
    return "(" + OqSL2::mono_string(k.first) + " # " + U().monomial_string(k.second) + ")";
  });
}

std::string to_string(const DlambdaClass& x) {
  return detail::lincomb_string<DlambdaKey>(x, [](const DlambdaKey& k) {
    PbwMonomial p;
    p.f = k.second;
    return "(" + OqSL2::mono_string(k.first) + " # " + U().monomial_string(p) + ".1_lambda)";
  });
}

DqElement dq_parse(const std::string& expr) {
  using P = detail::ExprParser<DqElement>;
  auto unit = [](const QScalar& s) { return dq_pure(O().one(), U().scalar(s)); };
  P::Hooks h;
  h.multiply = [](const DqElement& x, const DqElement& y) { return dq_multiply(x, y); };
  h.power = [unit](const DqElement& x, int n) {
    if (n < 0) throw std::invalid_argument("dq_parse: negative powers are not supported");
    DqElement r = unit(QScalar(1));
    for (int i = 0; i < n; ++i) r = dq_multiply(r, x);
    return r;
  };
  h.scalar = unit;
  h.atom = [unit](P::Cursor& cur, DqElement& out) {
    char ch = cur.s[cur.pos];
    if (ch >= 'a' && ch <= 'd') {
      ++cur.pos;
      out = dq_pure(O().parse(std::string(1, ch)), U().one());
      return true;
    }
    if (ch == 'q' || ch == 'v') {
      ++cur.pos;
      out = unit(ch == 'q' ? U().field().q() : QScalar::vpow(1));
      return true;
    }
    if (ch == 'E' || ch == 'F') {
      ++cur.pos;
      out = dq_pure(O().one(), ch == 'E' ? U().E(0) : U().F(0));
      return true;
    }
    if (ch == 'K') {
      size_t close = cur.s.find(')', cur.pos);
      if (close == std::string::npos) return false;
      out = dq_pure(O().one(), U().parse(cur.s.substr(cur.pos, close + 1 - cur.pos)));
      cur.pos = close + 1;
      return true;
    }
    return false;
  };
  return P(h, expr).parse();
}

DqElement random_dq_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> g(0, 3), small(0, 2), k(-1, 1), coef(-2, 2);
  const OqSL2& O = OqSL2::get();
  DqElement x;
  for (int t = 0; t < 2; ++t) {
    OqElement o = O.one();
    int d = small(rng);
    for (int i = 0; i < d; ++i) {
      int s = g(rng);
      o = O.multiply(o, O.gen(s / 2, s % 2));
    }
    PbwMonomial p;
    p.f[0] = small(rng);
    p.e[0] = small(rng);
    p.k = Weight(k(rng));
    int c = coef(rng);
    x += dq_pure(o, UqElement(p)).scaled(c == 0 ? O.field().q() : QScalar(c));
  }
  return x;
}

}  // namespace qflag
