#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qflag/lincomb.hpp"
#include "qflag/root_datum.hpp"

namespace qflag {

inline constexpr int kMaxRoots = 3;
using RootExps = std::array<uint8_t, kMaxRoots>;

// F^a K_mu E^b with F^a = F_{beta_1}^{a_1} ... in PBW order, same for E^b.
struct PbwMonomial {
  RootExps f{};
  Weight k;
  RootExps e{};
  auto operator<=>(const PbwMonomial&) const = default;
};

using UqElement = LinComb<PbwMonomial>;
template <size_t N>
using UqTensorN = LinComb<std::array<PbwMonomial, N>>;
using UqTensor = UqTensorN<2>;

struct Generator {
  enum class Kind : uint8_t { E, F, K };
  Kind kind;
  int root = 0;  // PBW root index for E/F
  Weight mu;     // for K
  static Generator E(int root) { return {Kind::E, root, {}}; }
  static Generator F(int root) { return {Kind::F, root, {}}; }
  static Generator K(const Weight& mu) { return {Kind::K, 0, mu}; }
  auto operator<=>(const Generator&) const = default;
};
using Word = std::vector<Generator>;

// The presented algebra U_q for a root datum, PBW normal forms and Hopf
// structure. Products are computed by left multiplication with single
// generators; results for E/F generators are memoized.
//
// Hopf convention: Delta(E_i) = E_i x 1 + K_i x E_i, Delta(F_i) = F_i x K_i^-1 + 1 x F_i,
// Delta(K) = K x K, S(E_i) = -K_i^-1 E_i, S(F_i) = -F_i K_i, K_i = K_{alpha_i}.
class UqAlgebra {
 public:
  static const UqAlgebra& get(CartanType t);
  explicit UqAlgebra(const RootDatum& rd);
  UqAlgebra(const UqAlgebra&) = delete;
  UqAlgebra& operator=(const UqAlgebra&) = delete;

  const RootDatum& datum() const { return rd_; }
  const QField& field() const { return rd_.field(); }
  static const char* hopf_convention();
  static const char* grading_convention();

  UqElement one() const { return UqElement(PbwMonomial{}); }
  UqElement scalar(const QScalar& c) const { return UqElement(PbwMonomial{}, c); }
  UqElement E(int i) const { return root_E(rd_.simple_root_index(i)); }
  UqElement F(int i) const { return root_F(rd_.simple_root_index(i)); }
  UqElement K(const Weight& mu) const;
  UqElement root_E(int r) const;
  UqElement root_F(int r) const;
  UqElement generator(const Generator& g) const;

  UqElement normal_form(const Word& w) const;
  UqElement normal_form(const std::vector<std::pair<QScalar, Word>>& sum) const;
  UqElement multiply(const UqElement& x, const UqElement& y) const;
  UqElement left_mul(const Generator& g, const UqElement& y) const;
  UqElement power(const UqElement& x, int n) const;
  UqElement commutator(const UqElement& x, const UqElement& y) const;
  Word monomial_word(const PbwMonomial& m) const;

  UqTensor coproduct(const UqElement& x) const;
  UqElement antipode(const UqElement& x) const;
  QScalar counit(const UqElement& x) const;
  UqElement adjoint_act(const UqElement& u, const UqElement& v) const;
  // anti-automorphism E_i <-> F_i fixing K_mu (used for contravariant forms)
  UqElement tau(const UqElement& x) const;

  UqTensor tensor_multiply(const UqTensor& x, const UqTensor& y) const;
  template <size_t N>
  UqTensorN<N> tensor_multiply_n(const UqTensorN<N>& x, const UqTensorN<N>& y) const;
  UqElement mono_multiply(const PbwMonomial& a, const PbwMonomial& b) const;

  Weight weight(const PbwMonomial& m) const;
  // -1 if x is not homogeneous
  bool is_homogeneous(const UqElement& x, Weight* w = nullptr) const;
  int monomial_degree(const PbwMonomial& m) const;
  int filtration_degree(const UqElement& x) const;
  long graded_piece_dim(int j, int k_window) const;
  std::pair<int, bool> ad_orbit_probe(const UqElement& v, int cutoff) const;

  // rewriting data: E_s E_r for s > r as ordered monomials, and [E_r, F_s]
  const std::vector<std::pair<QScalar, RootExps>>& ordered_swap(int s, int r) const {
    return swap_[s][r];
  }
  const UqElement& root_commutator(int r, int s) const { return comm_[r][s]; }

  std::string to_string(const UqElement& x) const;
  std::string monomial_string(const PbwMonomial& m) const;
  UqElement parse(const std::string& expr) const;

 private:
  using Ordered = LinComb<RootExps>;
  Ordered left_mul_ordered(int r, const RootExps& a) const;
  Ordered mul_ordered(const RootExps& m, const Ordered& y) const;
  UqElement left_mul_mono(const Generator& g, const PbwMonomial& m) const;
  UqElement left_mul_E(int r, const PbwMonomial& m) const;
  UqTensor coproduct_generator(const Generator& g) const;
  UqTensor coproduct_mono(const PbwMonomial& m) const;
  UqElement antipode_generator(const Generator& g) const;
  UqElement antipode_mono(const PbwMonomial& m) const;
  void build_tables();

  const RootDatum& rd_;
  int nroots_;
  std::vector<Weight> roots_;
  std::vector<std::vector<std::vector<std::pair<QScalar, RootExps>>>> swap_;
  std::vector<std::vector<UqElement>> comm_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, RootExps>, Ordered> ordered_cache_;
  mutable std::map<std::pair<int, PbwMonomial>, UqElement> e_cache_;
  mutable std::map<std::pair<PbwMonomial, PbwMonomial>, UqElement> mono_cache_;
  mutable std::map<PbwMonomial, UqTensor> delta_cache_;
  mutable std::map<PbwMonomial, UqElement> antipode_cache_;
};

template <size_t N>
UqTensorN<N> UqAlgebra::tensor_multiply_n(const UqTensorN<N>& x, const UqTensorN<N>& y) const {
  UqTensorN<N> out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      // expand leg by leg
      std::vector<std::pair<std::array<PbwMonomial, N>, QScalar>> partial{{{}, cx * cy}};
      for (size_t leg = 0; leg < N; ++leg) {
        UqElement p = mono_multiply(kx[leg], ky[leg]);
        std::vector<std::pair<std::array<PbwMonomial, N>, QScalar>> next;
        for (const auto& [key, c] : partial)
          for (const auto& [m, d] : p) {
            auto k2 = key;
            k2[leg] = m;
            next.push_back({k2, c * d});
          }
        partial = std::move(next);
      }
      for (const auto& [key, c] : partial) out.add(key, c);
    }
  }
  return out;
}

}  // namespace qflag
