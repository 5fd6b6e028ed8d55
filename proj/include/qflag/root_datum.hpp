#pragma once

#include <array>
#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "qflag/scalars.hpp"

namespace qflag {

inline constexpr int kMaxRank = 2;

enum class CartanType { A1, A2 };

std::string to_string(CartanType t);
CartanType parse_cartan_type(const std::string& s);

// Element of the weight lattice P in omega-coordinates. Unused coordinates are 0.
struct Weight {
  std::array<int, kMaxRank> c{};

  Weight() = default;
  explicit Weight(int a, int b = 0) : c{a, b} {}

  int operator[](int i) const { return c[i]; }
  int& operator[](int i) { return c[i]; }
  Weight operator+(const Weight& o) const { return Weight(c[0] + o.c[0], c[1] + o.c[1]); }
  Weight operator-(const Weight& o) const { return Weight(c[0] - o.c[0], c[1] - o.c[1]); }
  Weight operator-() const { return Weight(-c[0], -c[1]); }
  Weight operator*(int k) const { return Weight(k * c[0], k * c[1]); }
  bool is_zero() const { return c[0] == 0 && c[1] == 0; }
  auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w, int rank);

class RootDatum;

// Character of P: q^mu for integral mu, or arbitrary nonzero values on omega_i.
class WeightCharacter {
 public:
  struct Integral {
    Weight mu;
    bool operator==(const Integral&) const = default;
  };
  struct Formal {
    std::vector<QScalar> values;
    bool operator==(const Formal&) const = default;
  };

  static WeightCharacter integral(const Weight& mu) { return WeightCharacter(Integral{mu}); }
  static WeightCharacter formal(std::vector<QScalar> values);

  bool is_integral() const { return std::holds_alternative<Integral>(rep_); }
  const Weight& mu() const { return std::get<Integral>(rep_).mu; }
  const std::vector<QScalar>& values() const { return std::get<Formal>(rep_).values; }

  // value of the character on a weight
  QScalar value(const RootDatum& rd, const Weight& nu) const;
  // the character q^nu * this (additive notation: this + nu)
  WeightCharacter shifted(const RootDatum& rd, const Weight& nu) const;
  // the inverse character (additive notation: -this)
  WeightCharacter negated() const;
  // values on omega_i, whatever the representation
  std::vector<QScalar> omega_values(const RootDatum& rd) const;
  std::string to_string(const RootDatum& rd) const;

  bool operator==(const WeightCharacter&) const = default;

 private:
  explicit WeightCharacter(std::variant<Integral, Formal> r) : rep_(std::move(r)) {}
  std::variant<Integral, Formal> rep_;
};

struct WeylElement {
  std::vector<int> word;  // reduced word in simple reflections, applied right to left
  std::array<std::array<int, kMaxRank>, kMaxRank> matrix{};  // action on omega-coordinates
};

class RootDatum {
 public:
  static const RootDatum& get(CartanType t);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  int L() const { return field_.L(); }
  const QField& field() const { return field_; }

  const Weight& simple_root(int i) const { return simple_roots_[i]; }
  Weight omega(int i) const;
  Weight rho() const;
  int cartan(int i, int j) const { return cartan_[i][j]; }

  // positive roots in PBW order; simple_index(r) is the simple-root index of root r or -1
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
  int simple_root_index(int i) const { return simple_to_root_[i]; }
  int root_simple_index(int r) const;
  int root_height(int r) const { return root_heights_[r]; }

  mpq_class pairing(const Weight& a, const Weight& b) const;
  // coordinates of mu in the simple-root basis (rational)
  std::array<mpq_class, kMaxRank> root_coordinates(const Weight& mu) const;
  bool in_root_lattice(const Weight& mu) const;
  // height of an element of Q (sum of simple-root coordinates); throws outside Q
  int height(const Weight& mu) const;
  // mu = sum c_i alpha_i with c_i >= 0 integral
  bool in_positive_cone(const Weight& mu) const;
  Weight from_root_coordinates(int a, int b = 0) const;

  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  const WeylElement& longest_element() const;
  Weight reflect(int i, const Weight& mu) const;
  Weight weyl_act(const WeylElement& w, const Weight& mu) const;
  WeightCharacter weyl_act(const WeylElement& w, const WeightCharacter& lambda) const;
  WeylElement inverse(const WeylElement& w) const;

  bool is_dominant_classical(const Weight& mu) const;
  long weyl_dim(const Weight& lambda) const;
  long kostant_partition(const Weight& beta) const;

  // Weights of the simple module V_lambda with multiplicities, via Freudenthal.
  std::vector<std::pair<Weight, int>> character(const Weight& lambda) const;

  std::string label() const { return to_string(type_); }

 private:
  RootDatum(CartanType t);
  CartanType type_;
  int rank_;
  QField field_;
  int cartan_[kMaxRank][kMaxRank]{};
  mpq_class gram_[kMaxRank][kMaxRank];  // <omega_i, omega_j>
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<int> simple_to_root_;
  std::vector<int> root_heights_;
  std::vector<WeylElement> weyl_;
};

}  // namespace qflag
