#pragma once

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/uq_algebra.hpp"

namespace qflag {

// Normal monomial a^i b^j c^k d^l of O_q(SL2) with min(i, l) = 0.
// The generators are the matrix coefficients x_00 = a, x_01 = b, x_10 = c,
// x_11 = d of the natural module with basis v_0 (weight omega), v_1 = F v_0.
using OqMono = std::array<int, 4>;
using OqElement = LinComb<OqMono>;
using OqTensor = LinComb<std::pair<OqMono, OqMono>>;

// a^i b^j in O_q(B) = O_q / (c), i in Z (d = a^-1), with b a = q^-1 a b.
struct BMono {
  int a = 0;
  int b = 0;
  auto operator<=>(const BMono&) const = default;
};
using BElement = LinComb<BMono>;
using OqBTensor = LinComb<std::pair<OqMono, BMono>>;

class OqSL2 {
 public:
  static const OqSL2& get();

  const UqAlgebra& uq() const { return U_; }
  const QField& field() const { return U_.field(); }

  OqElement one() const { return OqElement(OqMono{}); }
  // matrix coefficient x_ij, i, j in {0, 1}
  OqElement gen(int i, int j) const;
  OqElement a() const { return gen(0, 0); }
  OqElement b() const { return gen(0, 1); }
  OqElement c() const { return gen(1, 0); }
  OqElement d() const { return gen(1, 1); }

  OqElement multiply(const OqElement& x, const OqElement& y) const;
  OqElement power(const OqElement& x, int n) const;
  // product of the matrix coefficients x_{rows[t] cols[t]} in order
  OqElement word(const std::vector<int>& rows, const std::vector<int>& cols) const;

  static int degree(const OqMono& m) { return m[0] + m[1] + m[2] + m[3]; }
  // weights in omega-coordinates: row index (right action of U) and column index (left action)
  static int row_weight(const OqMono& m) { return m[0] + m[1] - m[2] - m[3]; }
  static int col_weight(const OqMono& m) { return m[0] + m[2] - m[1] - m[3]; }

  OqTensor coproduct(const OqElement& x) const;
  QScalar counit(const OqElement& x) const;
  OqElement antipode(const OqElement& x) const;
  OqElement antipode_inverse(const OqElement& x) const;

  // (u, x): evaluation of the matrix-coefficient function x at u
  QScalar pair(const UqElement& u, const OqElement& x) const;
  // u.x = x_1 (u, x_2) and x.u = (u, x_1) x_2
  OqElement left_act(const UqElement& u, const OqElement& x) const;
  OqElement right_act(const OqElement& x, const UqElement& u) const;

  BElement b_multiply(const BElement& x, const BElement& y) const;
  BElement project_B(const OqElement& x) const;
  // (id x pi) Delta
  OqBTensor coact_B(const OqElement& x) const;
  OqBTensor tensor_multiply(const OqBTensor& x, const OqBTensor& y) const;

  // matrix coefficients of V_n in the basis v_k = F^k v_0: u v_j = sum_i (u, x_ij) v_i
  const std::vector<std::vector<OqElement>>& matrix_coefficients(int n) const;

  std::string to_string(const OqElement& x) const;
  static std::string mono_string(const OqMono& m);
  std::string to_string(const BElement& x) const;
  std::string to_string(const OqBTensor& x) const;
  // grammar: sums/products/powers of a, b, c, d, q, v, integers, [scalar]
  OqElement parse(const std::string& expr) const;

 private:
  OqSL2();
  OqElement left_mul(int gen_index, const OqMono& m) const;
  OqElement mono_times(const OqMono& x, const OqElement& y) const;
  // action of a PBW monomial on the basis vector e_J of V_1^{(x) n}
  std::map<uint32_t, QScalar> tensor_act(const PbwMonomial& m, int n, uint32_t J) const;
  static void letters(const OqMono& m, std::vector<int>& rows, std::vector<int>& cols);

  const UqAlgebra& U_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<OqMono, OqMono>, OqElement> mul_cache_;
  mutable std::map<int, std::vector<std::vector<OqElement>>> coeff_cache_;
};

// ---------------------------------------------------------------------------
// B_q-modules and equivariant sheaves O_q (x) V

// Finite-dimensional right O_q(B)-comodule: e_s -> sum_t e_t (x) coaction[t][s].
struct BModule {
  std::vector<int> weights;  // omega-coordinate torus weight of each basis vector
  std::vector<std::vector<BElement>> coaction;
  size_t dim() const { return weights.size(); }

  static BModule character(int n);  // k_{n omega}: 1 -> 1 (x) a^n
  static BModule trivial() { return character(0); }
  // restriction of V_n (basis F^k v_0) to B_q
  static BModule restriction(int n);
  // V_n with the trivial B_q-coaction
  static BModule trivialized(int n);
  BModule twisted(int n) const;  // (x) k_{n omega}
  bool is_comodule() const;
};

// O_q (x) V with O_q acting on the first factor, tensor coaction, optionally
// modulo the span of the O_q-monomials selected by `killed`.
struct EquivariantModule {
  BModule fiber;
  std::function<bool(const OqMono&)> killed;
  std::string label;

  static EquivariantModule line_bundle(int n);  // O_q(n omega) = p*(k_{-n omega})
  EquivariantModule twisted(int n) const;       // M(n omega) = M (x) k_{-n omega}
};

// element of O_q (x) V: per basis index of V, an O_q element
using SectionVector = std::vector<OqElement>;
using CoactImage = LinComb<std::tuple<OqMono, int, BMono>>;

CoactImage coact(const EquivariantModule& M, const SectionVector& x);

struct SectionsResult {
  long dim = 0;
  int window = 0;
  bool certified = false;
  std::string warning;
  std::vector<SectionVector> basis;
};

// B_q-invariants of M among O_q-monomials of degree <= window.
SectionsResult invariants(const EquivariantModule& M, int window);
SectionsResult line_bundle_sections(int n, int window);
// Ind(V) = (O_q (x) V)^{B_q}
SectionsResult induction(const BModule& V, int window);
// alpha is a comodule map: coact(g x) = coact(g) coact(x) on generators g and window monomials
bool check_equivariance(const EquivariantModule& M, int window);

}  // namespace qflag
