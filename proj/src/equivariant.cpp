#include <set>
#include <stdexcept>

#include "qflag/oq.hpp"

namespace qflag {

namespace {

using BTensor = LinComb<std::pair<BMono, BMono>>;

BTensor b_coproduct(const OqSL2& O, const BElement& x) {
  // a -> a (x) a, b -> a (x) b + b (x) a^-1, multiplicative
  BTensor out;
  for (const auto& [m, c] : x) {
    BTensor cur;
    cur.add({BMono{m.a, 0}, BMono{m.a, 0}}, c);
    for (int t = 0; t < m.b; ++t) {
      BTensor next;
      for (const auto& [k, d] : cur) {
        for (const auto& [l, r] : {std::pair{BMono{1, 0}, BMono{0, 1}}, std::pair{BMono{0, 1}, BMono{-1, 0}}}) {
          BElement left = O.b_multiply(BElement(k.first), BElement(l));
          BElement right = O.b_multiply(BElement(k.second), BElement(r));
          for (const auto& [ml, cl] : left)
            for (const auto& [mr, cr] : right) next.add({ml, mr}, d * cl * cr);
        }
      }
      cur = std::move(next);
    }
    out += cur;
  }
  return out;
}

std::vector<OqMono> monomials_up_to(int window) {
  std::vector<OqMono> out;
  for (int d = 0; d <= window; ++d) {
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) out.push_back(OqMono{i, j, d - i - j, 0});
    for (int l = 1; l <= d; ++l)
      for (int j = 0; j + l <= d; ++j) out.push_back(OqMono{0, j, d - j - l, l});
  }
  return out;
}

bool is_killed(const EquivariantModule& M, const OqMono& m) { return M.killed && M.killed(m); }

// invariants restricted to O_q-monomials of a fixed row weight
std::vector<SectionVector> block_invariants(const EquivariantModule& M, const std::vector<OqMono>& monos) {
  const size_t r = M.fiber.dim();
  std::vector<std::pair<OqMono, int>> unknowns;
  for (const auto& m : monos)
    for (size_t s = 0; s < r; ++s) unknowns.push_back({m, static_cast<int>(s)});
  if (unknowns.empty()) return {};
  std::map<std::tuple<OqMono, int, BMono>, size_t> row_index;
  std::vector<CoactImage> cols;
  for (const auto& [m, s] : unknowns) {
    SectionVector x(r);
    x[s] = OqElement(m);
    CoactImage img = coact(M, x);
    img.add({m, s, BMono{}}, QScalar(-1));
    for (const auto& [k, c] : img) row_index.emplace(k, 0);
    cols.push_back(std::move(img));
  }
  size_t nrow = 0;
  for (auto& [k, idx] : row_index) idx = nrow++;
  Matrix A(nrow, unknowns.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j]) A.at(row_index[k], j) = c;
  std::vector<SectionVector> out;
  for (const auto& vec : kernel(A)) {
    SectionVector x(r);
    for (size_t j = 0; j < unknowns.size(); ++j)
      if (!vec[j].is_zero()) x[unknowns[j].second].add(unknowns[j].first, vec[j]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<SectionVector> all_invariants(const EquivariantModule& M, int window) {
  std::map<int, std::vector<OqMono>> by_row;
  for (const auto& m : monomials_up_to(window))
    if (!is_killed(M, m)) by_row[OqSL2::row_weight(m)].push_back(m);
  std::vector<SectionVector> out;
  for (const auto& [row, monos] : by_row)
    for (auto& v : block_invariants(M, monos)) out.push_back(std::move(v));
  return out;
}

}  // namespace

BModule BModule::character(int n) {
  BModule V;
  V.weights = {n};
  V.coaction = {{BElement(BMono{n, 0})}};
  return V;
}

BModule BModule::restriction(int n) {
  const OqSL2& O = OqSL2::get();
  const auto& x = O.matrix_coefficients(n);
  BModule V;
  for (int k = 0; k <= n; ++k) V.weights.push_back(n - 2 * k);
  V.coaction.assign(n + 1, std::vector<BElement>(n + 1));
  for (int t = 0; t <= n; ++t)
    for (int s = 0; s <= n; ++s) V.coaction[t][s] = O.project_B(x[t][s]);
  return V;
}

BModule BModule::trivialized(int n) {
  BModule V;
  V.weights.assign(n + 1, 0);
  V.coaction.assign(n + 1, std::vector<BElement>(n + 1));
  for (int s = 0; s <= n; ++s) V.coaction[s][s] = BElement(BMono{});
  return V;
}

BModule BModule::twisted(int n) const {
  const OqSL2& O = OqSL2::get();
  BModule V = *this;
  for (auto& w : V.weights) w += n;
  for (auto& row : V.coaction)
    for (auto& b : row) b = O.b_multiply(b, BElement(BMono{n, 0}));
  return V;
}

bool BModule::is_comodule() const {
  const OqSL2& O = OqSL2::get();
  size_t r = dim();
  for (size_t t = 0; t < r; ++t)
    for (size_t s = 0; s < r; ++s) {
      // counit
      QScalar eps;
      for (const auto& [m, c] : coaction[t][s])
        if (m.b == 0) eps += c;
      if (eps != QScalar(t == s ? 1 : 0)) return false;
      // coassociativity: Delta(beta_ts) = sum_u beta_tu (x) beta_us
      BTensor rhs;
      for (size_t u = 0; u < r; ++u)
        for (const auto& [ml, cl] : coaction[t][u])
          for (const auto& [mr, cr] : coaction[u][s]) rhs.add({ml, mr}, cl * cr);
      if (!(b_coproduct(O, coaction[t][s]) == rhs)) return false;
    }
  return true;
}

EquivariantModule EquivariantModule::line_bundle(int n) {
  return EquivariantModule{BModule::character(-n), nullptr, "O_q(" + std::to_string(n) + ")"};
}

EquivariantModule EquivariantModule::twisted(int n) const {
  return EquivariantModule{fiber.twisted(-n), killed, label + "(" + std::to_string(n) + ")"};
}

CoactImage coact(const EquivariantModule& M, const SectionVector& x) {
  const OqSL2& O = OqSL2::get();
  CoactImage out;
  for (size_t s = 0; s < x.size(); ++s)
    for (const auto& [m, c] : O.coact_B(x[s]))
      for (size_t t = 0; t < M.fiber.dim(); ++t) {
        if (M.fiber.coaction[t][s].is_zero() || is_killed(M, m.first)) continue;
        for (const auto& [bm, bc] : O.b_multiply(BElement(m.second), M.fiber.coaction[t][s]))
          out.add({m.first, static_cast<int>(t), bm}, c * bc);
      }
  return out;
}

SectionsResult invariants(const EquivariantModule& M, int window) {
  if (window < 1) throw std::invalid_argument("invariants: window must be at least 1");
  SectionsResult r;
  r.window = window;
  r.basis = all_invariants(M, window);
  r.dim = static_cast<long>(r.basis.size());
  long below = static_cast<long>(all_invariants(M, window - 1).size());
  int reach = 0;
  for (int w : M.fiber.weights) reach = std::max(reach, std::abs(w));
  r.certified = below == r.dim && window > reach;
  if (!r.certified)
    r.warning = "window " + std::to_string(window) + " too small: dimension " + std::to_string(below) + " at " +
                std::to_string(window - 1) + " vs " + std::to_string(r.dim) + ", fiber weights reach " +
                std::to_string(reach);
  return r;
}

SectionsResult line_bundle_sections(int n, int window) {
  return invariants(EquivariantModule::line_bundle(n), window);
}

SectionsResult induction(const BModule& V, int window) { return invariants(EquivariantModule{V, nullptr, "Ind"}, window); }

bool check_equivariance(const EquivariantModule& M, int window) {
  const OqSL2& O = OqSL2::get();
  std::array<OqElement, 4> gens = {O.a(), O.b(), O.c(), O.d()};
  for (const auto& g : gens) {
    OqBTensor cg = O.coact_B(g);
    for (const auto& m : monomials_up_to(window)) {
      if (is_killed(M, m)) continue;
      for (size_t s = 0; s < M.fiber.dim(); ++s) {
        SectionVector x(M.fiber.dim()), gx(M.fiber.dim());
        x[s] = OqElement(m);
        for (const auto& [pm, pc] : O.multiply(g, x[s]))
          if (!is_killed(M, pm)) gx[s].add(pm, pc);
        CoactImage lhs = coact(M, gx), rhs;
        for (const auto& [k, c] : coact(M, x))
          for (const auto& [gk, gc] : cg)
            for (const auto& [pm, pc] : O.multiply(OqElement(gk.first), OqElement(std::get<0>(k)))) {
              if (is_killed(M, pm)) continue;
              for (const auto& [bm, bc] : O.b_multiply(BElement(gk.second), BElement(std::get<2>(k))))
                rhs.add({pm, std::get<1>(k), bm}, c * gc * pc * bc);
            }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace qflag
