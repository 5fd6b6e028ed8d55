#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/uq_algebra.hpp"
#include "qflag/weight_modules.hpp"

namespace qflag {

using Vec = std::vector<QScalar>;

// A finite-dimensional U_q-module given by weights and simple-root F/E
// matrices, with basis vector k written as sum coef * F_{i_1} ... F_{i_r} e_0.
struct UModuleData {
  Weight highest;
  std::vector<Weight> weights;
  std::vector<Matrix> E, F;  // per simple root
  std::vector<std::vector<std::pair<std::vector<int>, QScalar>>> basis_words;
  size_t dim() const { return weights.size(); }
};

// The braiding c(a (x) w) : V (x) W -> W (x) V fixed by U_q-linearity and
// c(a (x) w_hw) = q^{<wt a, wt w_hw>} w_hw (x) a. Index of a (x) w is a * dim W + w.
Matrix standard_braiding(const UqAlgebra& U, const UModuleData& V, const UModuleData& W);
// tensor product action on V (x) W through the coproduct
Matrix tensor_action(const UqAlgebra& U, const UModuleData& V, const UModuleData& W, int simple, bool is_E);

// The multigraded representation ring A = (+)_{lambda in P_+} V_lambda up to a
// degree bound. A1: the quantum plane k<x, y>/(xy - t yx) with basis
// x^{n-k} y^k of A_n. A2: components V_lambda with product = Cartan projection.
class RepRing {
 public:
  static const RepRing& get(CartanType t);

  const UqAlgebra& algebra() const { return U_; }
  CartanType type() const { return U_.datum().type(); }
  int rank() const { return U_.datum().rank(); }
  int bound() const { return bound_; }
  // lambda in P_+ with coordinate sum <= bound
  bool in_window(const Weight& lambda) const;
  std::vector<Weight> window() const;

  const UModuleData& component(const Weight& lambda) const;
  size_t dim(const Weight& lambda) const { return component(lambda).dim(); }
  std::string basis_label(const Weight& lambda, size_t k) const;

  // A_lambda (x) A_mu -> A_{lambda+mu}; column a * dim(mu) + b
  const Matrix& multiplication(const Weight& lambda, const Weight& mu) const;
  Vec multiply(const Weight& lambda, const Vec& a, const Weight& mu, const Vec& b) const;
  // sigma = q^{(1/2)<lambda,mu>} R-flip : A_lambda (x) A_mu -> A_mu (x) A_lambda.
  // A1: R-flip from the shipped V_1 (x) V_1 data, extended over letters.
  // A2: R-flip = q^{-(3/2)<lambda,mu>} c_std, the same normalization.
  const Matrix& braiding(const Weight& lambda, const Weight& mu) const;

  // A1 only: xy = t yx with t solved from m o sigma = m on A_1 (x) A_1, frozen
  static QScalar plane_relation();
  std::string relation_string() const;

 private:
  explicit RepRing(CartanType t);
  void build_a1();
  void build_a2();
  Matrix a1_multiplication(int m, int n) const;
  Matrix a1_braiding(int m, int n) const;
  Matrix a2_multiplication(const Weight& lambda, const Weight& mu) const;

  const UqAlgebra& U_;
  int bound_;
  std::map<Weight, UModuleData> components_;
  std::map<Weight, std::shared_ptr<SimpleModule>> simple_modules_;  // A2 components
  std::map<Weight, std::vector<size_t>> order_;  // basis k = SimpleModule basis order_[k], highest first
  mutable std::mutex mu_;
  mutable std::map<std::pair<Weight, Weight>, Matrix> mult_cache_, braid_cache_;
};

// Shipped R-flip on V_1 (x) V_1 (basis x, y; index 2i + j), as v-exponent data.
Matrix shipped_r_flip_a1();
// Relation coefficient t (xy = t yx) from the image of 1 - sigma on V_1 (x) V_1;
// nullopt when that image is not a single xy/yx relation.
std::optional<QScalar> solve_plane_relation(const Matrix& sigma11, std::string* why = nullptr);

struct BraidedReport {
  CartanType type = CartanType::A1;
  long pairs_checked = 0;
  std::vector<std::string> counterexamples;
  std::string relation;
  bool passed() const { return counterexamples.empty(); }
};
// m o sigma = m on n random homogeneous pairs with total degree within max_total (0: ring bound)
BraidedReport check_braided_commutativity(CartanType t, int n, unsigned seed, int max_total = 0);
// A1: every monomial pair with total degree <= max_total
BraidedReport check_braided_commutativity_exhaustive(int max_total);

// ---------------------------------------------------------------------------
// Graded A-modules on a finite window

struct GradedAModule {
  int rank = 1;
  std::map<Weight, size_t> dims;
  // left action of basis vector g of A_{omega_i}: key (i, g, source degree)
  std::map<std::tuple<int, int, Weight>, Matrix> action;
  // M_lambda (x) A_nu -> A_nu (x) M_lambda; column m * dim A_nu + r, row r * dim M_lambda + m
  std::function<Matrix(const Weight& lambda, const Weight& nu)> braiding;
  std::string label;

  bool has(const Weight& lambda) const { return dims.count(lambda) > 0; }
  // result is empty when the target degree lies outside the window
  Vec act_generator(int i, int g, const Weight& lambda, const Vec& m) const;
  // left action of a homogeneous element of A_nu, through generator words
  Vec act(const RepRing& A, const Weight& nu, const Vec& r, const Weight& lambda, const Vec& m) const;

  // A itself on components with coordinate sum <= window
  static GradedAModule ring(const RepRing& A, int window);
  // a single component of dimension d at degree 0 with zero action (trivial U_q-module)
  static GradedAModule concentrated(int rank, size_t d);
};

GradedAModule twist(const GradedAModule& M, int i, int times = 1);
bool same_module(const GradedAModule& a, const GradedAModule& b);
// R_{>=k} M = 0 within the window
bool is_torsion(const RepRing& A, const GradedAModule& M, int k);

// m . r = act(braiding(m (x) r)); throws if M has no braiding
Vec right_act(const RepRing& A, const GradedAModule& M, const Weight& lambda, const Vec& m, const Weight& nu,
              const Vec& r);
// right action matrices of the generators, same keys as GradedAModule::action
std::map<std::tuple<int, int, Weight>, Matrix> right_action_from_left(const RepRing& A, const GradedAModule& M);

// Words in the generators spanning A_nu: word (sequence of (i, g)) and its value
struct WordBasis {
  std::vector<std::vector<std::pair<int, int>>> words;
  Matrix values;  // column per word
};
const WordBasis& generator_words(const RepRing& A, const Weight& nu);

// ---------------------------------------------------------------------------
// Serre-type checklist at window scale

struct ChecklistItem {
  std::string condition;
  std::string status;  // "checked", "failed", "not-decided"
  std::string detail;
};
// condition iv spot-check: Gamma(O_q(n)) -> Gamma((O_q / O_q c)(n)) surjective for n >= 0
std::vector<ChecklistItem> serre_checklist(int n_min, int n_max);

}  // namespace qflag
