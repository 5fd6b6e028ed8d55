#include "qflag/weight_modules.hpp"

#include <functional>

#include "central_a2_data.hpp"

namespace qflag {

namespace {

// exponent vectors whose weighted height is exactly h
void exps_of_height(const RootDatum& rd, int h, int idx, RootExps& cur, std::vector<RootExps>& out) {
  int nr = rd.num_positive_roots();
  if (idx == nr) {
    if (h == 0) out.push_back(cur);
    return;
  }
  for (int k = 0; k * rd.root_height(idx) <= h; ++k) {
    cur[idx] = static_cast<uint8_t>(k);
    exps_of_height(rd, h - k * rd.root_height(idx), idx + 1, cur, out);
  }
  cur[idx] = 0;
}

}  // namespace

VermaModule::VermaModule(const UqAlgebra& U, WeightCharacter lambda, int depth)
    : U_(U), lambda_(std::move(lambda)), depth_(depth) {
  if (depth < 0) throw std::invalid_argument("Verma depth must be nonnegative");
  const RootDatum& rd = U.datum();
  for (int h = 0; h <= depth; ++h) {
    std::vector<RootExps> layer;
    RootExps cur{};
    exps_of_height(rd, h, 0, cur, layer);
    for (const auto& a : layer) spaces_[offset(a)].push_back(a);
  }
}

int VermaModule::height(const RootExps& a) const {
  int h = 0;
  for (int r = 0; r < U_.datum().num_positive_roots(); ++r) h += a[r] * U_.datum().root_height(r);
  return h;
}

Weight VermaModule::offset(const RootExps& a) const {
  Weight w;
  for (int r = 0; r < U_.datum().num_positive_roots(); ++r) w = w + U_.datum().positive_roots()[r] * a[r];
  return w;
}

size_t VermaModule::dimension() const {
  size_t n = 0;
  for (const auto& [w, v] : spaces_) n += v.size();
  return n;
}

ModuleVector VermaModule::act(const UqElement& u, const ModuleVector& v) const {
  const RootDatum& rd = U_.datum();
  ModuleVector out;
  std::map<Weight, QScalar> kvals;
  auto lambda_of = [&](const Weight& mu) -> const QScalar& {
    auto it = kvals.find(mu);
    if (it == kvals.end()) it = kvals.emplace(mu, lambda_.value(rd, mu)).first;
    return it->second;
  };
  for (const auto& [m, c] : u)
    for (const auto& [a, d] : v) {
      for (const auto& [n, e] : U_.mono_multiply(m, PbwMonomial{a, {}, {}})) {
        if (n.e != RootExps{}) continue;
        if (height(n.f) > depth_)
          throw DepthOverflow("Verma action leaves truncation depth " + std::to_string(depth_));
        out.add(n.f, c * d * e * lambda_of(n.k));
      }
    }
  return out;
}

const CentralElementSet& central_elements(const UqAlgebra& U) {
  static const CentralElementSet a1 = [] {
    const UqAlgebra& A = UqAlgebra::get(CartanType::A1);
    const QField& f = A.field();
    Weight al = A.datum().simple_root(0);
    // C = F E + (q K + q^-1 K^-1) / (q - q^-1)^2 with K = K_alpha
    QScalar d2 = f.q_diff_inv() * f.q_diff_inv();
    UqElement c = A.multiply(A.F(0), A.E(0));
    c.add(A.K(al), f.q() * d2);
    c.add(A.K(-al), f.q_pow(-1) * d2);
    return CentralElementSet{{c}, "quantum Casimir FE + (qK + q^-1K^-1)/(q-q^-1)^2"};
  }();
  static const CentralElementSet a2 = [] {
    CentralElementSet z;
    for (const auto& terms : detail::central_a2_terms()) {
      UqElement x;
      for (const auto& t : terms) {
        PbwMonomial m;
        for (int r = 0; r < 3; ++r) {
          m.f[r] = static_cast<uint8_t>(t.f[r]);
          m.e[r] = static_cast<uint8_t>(t.e[r]);
        }
        m.k = Weight(t.k[0], t.k[1]);
        x.add(m, QScalar::parse(t.coeff));
      }
      z.elements.push_back(std::move(x));
    }
    z.description = "two central elements (K-parts in cosets 2w1+Q, 2w2+Q), solved from centrality and shipped as data";
    return z;
  }();
  return U.datum().type() == CartanType::A1 ? a1 : a2;
}

std::vector<QScalar> central_character(const UqAlgebra& U, const WeightCharacter& lambda,
                                       const CentralElementSet& z) {
  const RootDatum& rd = U.datum();
  WeightCharacter shifted = lambda.shifted(rd, -rd.rho());
  std::vector<QScalar> out;
  for (const auto& x : z.elements) {
    // on a highest weight vector only the pure K-terms survive
    QScalar s;
    for (const auto& [m, c] : x)
      if (m.f == RootExps{} && m.e == RootExps{}) s += c * shifted.value(rd, m.k);
    out.push_back(s);
  }
  return out;
}

std::vector<QScalar> central_character(const UqAlgebra& U, const WeightCharacter& lambda) {
  return central_character(U, lambda, central_elements(U));
}

bool chi_equal(const UqAlgebra& U, const WeightCharacter& a, const WeightCharacter& b) {
  return central_character(U, a) == central_character(U, b);
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    default:
      return "unknown-at-bound";
  }
}

namespace {

std::vector<Weight> positive_cone_box(const RootDatum& rd, int bound) {
  std::vector<Weight> out;
  int bmax = rd.rank() > 1 ? bound : 0;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bmax; ++b)
      if (a || b) out.push_back(rd.from_root_coordinates(a, b));
  return out;
}

std::string wstr(const RootDatum& rd, const Weight& w) { return to_string(w, rd.rank()); }

}  // namespace

DominanceResult dominance_chi_search(const UqAlgebra& U, const WeightCharacter& lambda, int bound) {
  const RootDatum& rd = U.datum();
  auto chi = central_character(U, lambda);
  for (const auto& phi : positive_cone_box(rd, bound)) {
    if (central_character(U, lambda.shifted(rd, phi)) == chi) {
      DominanceResult r{Tri::No, "chi_lambda = chi_{lambda+phi} at phi = " + wstr(rd, phi), phi, std::nullopt};
      return r;
    }
  }
  DominanceResult r;
  r.certificate = "no coincidence chi_lambda = chi_{lambda+phi} for phi in Q_+ with root coordinates <= " +
                  std::to_string(bound);
  if (lambda.is_integral()) {
    r.answer = Tri::Yes;
    return r;
  }
  // Beyond the box: a coincidence needs lambda + phi = w lambda, i.e. the
  // ratios (w lambda)(omega_i) / lambda(omega_i) = q^{c_i} with c_i >= 0.
  for (const auto& w : rd.weyl_group()) {
    if (w.word.empty()) continue;
    auto wl = rd.weyl_act(w, lambda).omega_values(rd);
    auto l = lambda.omega_values(rd);
    std::array<int, kMaxRank> c{};
    bool candidate = true;
    for (int i = 0; i < rd.rank() && candidate; ++i) {
      QScalar ratio = wl[i] / l[i];
      const LaurentPoly& n = ratio.num();
      if (!ratio.is_laurent() || !n.is_monomial() || n.leading_coeff() != 1 || n.low_exp() % rd.L() != 0 ||
          n.low_exp() < 0) {
        candidate = false;
        break;
      }
      c[i] = n.low_exp() / rd.L();
    }
    if (!candidate) continue;
    Weight phi = rd.from_root_coordinates(c[0], c[1]);
    if (phi.is_zero()) continue;
    if (central_character(U, lambda.shifted(rd, phi)) == chi)
      return DominanceResult{Tri::No, "chi_lambda = chi_{lambda+phi} at phi = " + wstr(rd, phi) + " (Weyl orbit)", phi,
                             std::nullopt};
  }
  r.answer = Tri::Yes;
  r.certificate += "; no Weyl-orbit coincidence lambda + phi = w lambda beyond the box";
  return r;
}

DominanceResult is_dominant(const UqAlgebra& U, const WeightCharacter& lambda, int bound) {
  const RootDatum& rd = U.datum();
  if (lambda.is_integral()) {
    bool d = rd.is_dominant_classical(lambda.mu());
    return DominanceResult{d ? Tri::Yes : Tri::No, "classical criterion on omega-coordinates", std::nullopt,
                           std::nullopt};
  }
  return dominance_chi_search(U, lambda, bound);
}

DominanceResult regular_dominance_chi_search(const UqAlgebra& U, const WeightCharacter& lambda, int bound) {
  const RootDatum& rd = U.datum();
  int bmax = rd.rank() > 1 ? bound : 0;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bmax; ++b) {
      Weight phi(a, b);
      auto chi_phi = central_character(U, lambda.shifted(rd, phi));
      for (const auto& [psi, mult] : rd.character(phi)) {
        if (psi == phi) continue;
        if (central_character(U, lambda.shifted(rd, psi)) == chi_phi)
          return DominanceResult{Tri::No,
                                 "chi_{lambda+phi} = chi_{lambda+psi} at phi = " + wstr(rd, phi) +
                                     ", psi = " + wstr(rd, psi),
                                 phi, psi};
      }
    }
  DominanceResult r;
  r.certificate = "no coincidence for phi in P_+ with coordinates <= " + std::to_string(bound);
  r.answer = lambda.is_integral() ? Tri::Yes : Tri::UnknownAtBound;
  return r;
}

DominanceResult is_regular_dominant(const UqAlgebra& U, const WeightCharacter& lambda, int bound) {
  DominanceResult d = is_dominant(U, lambda, std::max(bound, 6));
  if (d.answer == Tri::No) return d;
  return regular_dominance_chi_search(U, lambda, bound);
}

// ---------------------------------------------------------------------------

SimpleModule::SimpleModule(const UqAlgebra& U, const Weight& lambda, int depth)
    : U_(U), lambda_(lambda), verma_(U, WeightCharacter::integral(lambda), depth + 2) {
  const RootDatum& rd = U.datum();
  if (!rd.is_dominant_classical(lambda)) throw std::domain_error("simple_quotient: weight is not dominant");
  int max_rank_height = -1;
  for (const auto& [off, monos] : verma_.weight_spaces()) {
    int h = rd.height(off);
    if (h > depth + 1) continue;
    size_t k = monos.size();
    Matrix g(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i; j < k; ++j) g.at(i, j) = g.at(j, i) = shapovalov(monos[i], monos[j]);
    RowEchelon e = row_reduce(g);
    if (e.rank() == 0) continue;
    if (h > depth)
      throw DepthOverflow("simple_quotient: depth " + std::to_string(depth) + " too small to exhibit V_" +
                          to_string(lambda, rd.rank()));
    max_rank_height = std::max(max_rank_height, h);
    Block blk;
    blk.monomials = monos;
    Matrix gbb(e.rank(), e.rank()), gball(e.rank(), k);
    for (size_t i = 0; i < e.rank(); ++i) {
      for (size_t j = 0; j < e.rank(); ++j) gbb.at(i, j) = g.at(e.pivots[i], e.pivots[j]);
      for (size_t j = 0; j < k; ++j) gball.at(i, j) = g.at(e.pivots[i], j);
    }
    blk.projector = inverse(gbb) * gball;
    for (size_t p : e.pivots) {
      blk.basis_index.push_back(basis_.size());
      basis_.push_back(monos[p]);
      weights_.push_back(lambda - off);
    }
    blocks_.emplace(off, std::move(blk));
  }
  top_height_ = max_rank_height;
  gram_ = Matrix(basis_.size(), basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = 0; j < basis_.size(); ++j)
      if (weights_[i] == weights_[j]) gram_.at(i, j) = shapovalov(basis_[i], basis_[j]);
}

QScalar SimpleModule::shapovalov(const RootExps& a, const RootExps& b) const {
  UqElement t = U_.tau(UqElement(PbwMonomial{a, {}, {}}));
  return verma_.act(t, ModuleVector(b)).coeff(RootExps{});
}

std::map<Weight, int> SimpleModule::weight_multiplicities() const {
  std::map<Weight, int> m;
  for (const auto& w : weights_) ++m[w];
  return m;
}

std::vector<QScalar> SimpleModule::project(const ModuleVector& v) const {
  std::vector<QScalar> y(dim());
  std::map<Weight, std::vector<std::pair<RootExps, QScalar>>> parts;
  for (const auto& [a, c] : v) parts[verma_.offset(a)].push_back({a, c});
  for (const auto& [off, terms] : parts) {
    auto it = blocks_.find(off);
    if (it == blocks_.end()) continue;
    const Block& blk = it->second;
    std::vector<QScalar> z(blk.monomials.size());
    for (const auto& [a, c] : terms)
      for (size_t j = 0; j < blk.monomials.size(); ++j)
        if (blk.monomials[j] == a) z[j] += c;
    auto coords = blk.projector.apply(z);
    for (size_t i = 0; i < coords.size(); ++i) y[blk.basis_index[i]] += coords[i];
  }
  return y;
}

Matrix SimpleModule::generator_matrix(const Generator& g) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gen_cache_.find(g);
    if (it != gen_cache_.end()) return it->second;
  }
  Matrix m(dim(), dim());
  UqElement u = U_.generator(g);
  for (size_t j = 0; j < dim(); ++j) {
    auto col = project(verma_.act(u, ModuleVector(basis_[j])));
    for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  std::lock_guard<std::mutex> lock(mu_);
  gen_cache_.emplace(g, m);
  return m;
}

Matrix SimpleModule::action(const UqElement& u) const {
  Matrix total(dim(), dim());
  for (const auto& [m, c] : u) {
    Matrix cur = Matrix::identity(dim());
    for (const auto& g : U_.monomial_word(m)) cur = cur * generator_matrix(g);
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = 0; j < dim(); ++j)
        if (!cur.at(i, j).is_zero()) total.at(i, j) += c * cur.at(i, j);
  }
  return total;
}

std::vector<QScalar> SimpleModule::act(const UqElement& u, const std::vector<QScalar>& x) const {
  return action(u).apply(x);
}

}  // namespace qflag
