#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qflag/linalg.hpp"
#include "qflag/uq_algebra.hpp"

namespace qflag {

class DepthOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector in a Verma module: coefficients on F^a . 1_lambda.
using ModuleVector = LinComb<RootExps>;

// M_lambda truncated at F-height <= depth.
class VermaModule {
 public:
  VermaModule(const UqAlgebra& U, WeightCharacter lambda, int depth);

  const UqAlgebra& algebra() const { return U_; }
  const WeightCharacter& highest() const { return lambda_; }
  int depth() const { return depth_; }

  ModuleVector highest_vector() const { return ModuleVector(RootExps{}); }
  // height of the weight offset of F^a (its vector has weight lambda - offset)
  int height(const RootExps& a) const;
  Weight offset(const RootExps& a) const;

  ModuleVector act(const UqElement& u, const ModuleVector& v) const;
  // all basis monomials grouped by weight offset
  const std::map<Weight, std::vector<RootExps>>& weight_spaces() const { return spaces_; }
  size_t dimension() const;

 private:
  const UqAlgebra& U_;
  WeightCharacter lambda_;
  int depth_;
  std::map<Weight, std::vector<RootExps>> spaces_;
};

struct CentralElementSet {
  std::vector<UqElement> elements;
  std::string description;
};

// A1: the quantum Casimir. A2: two elements shipped as data.
const CentralElementSet& central_elements(const UqAlgebra& U);

// Eigenvalues of the central elements on the highest weight vector of M_{lambda - rho}.
std::vector<QScalar> central_character(const UqAlgebra& U, const WeightCharacter& lambda);
std::vector<QScalar> central_character(const UqAlgebra& U, const WeightCharacter& lambda,
                                       const CentralElementSet& z);
bool chi_equal(const UqAlgebra& U, const WeightCharacter& a, const WeightCharacter& b);

enum class Tri { Yes, No, UnknownAtBound };
std::string to_string(Tri t);

struct DominanceResult {
  Tri answer = Tri::UnknownAtBound;
  bool value() const { return answer == Tri::Yes; }
  std::string certificate;
  std::optional<Weight> phi, psi;  // coincidence witnesses when answer is No
};

// lambda dominant iff chi_lambda != chi_{lambda + phi} for phi in Q_+ \ 0.
// Integral characters are decided by the classical criterion; the chi-search
// is available separately for cross-checks.
DominanceResult is_dominant(const UqAlgebra& U, const WeightCharacter& lambda, int bound = 6);
DominanceResult dominance_chi_search(const UqAlgebra& U, const WeightCharacter& lambda, int bound);
DominanceResult is_regular_dominant(const UqAlgebra& U, const WeightCharacter& lambda, int bound = 4);
DominanceResult regular_dominance_chi_search(const UqAlgebra& U, const WeightCharacter& lambda, int bound);

// V_lambda as the quotient of M_lambda by the radical of the contravariant form.
class SimpleModule {
 public:
  SimpleModule(const UqAlgebra& U, const Weight& lambda, int depth);

  const UqAlgebra& algebra() const { return U_; }
  const Weight& highest() const { return lambda_; }
  size_t dim() const { return basis_.size(); }
  // basis vectors are images of F-monomials; weights listed per basis vector
  const std::vector<RootExps>& basis() const { return basis_; }
  const std::vector<Weight>& weights() const { return weights_; }
  // weight -> multiplicity
  std::map<Weight, int> weight_multiplicities() const;

  Matrix action(const UqElement& u) const;
  std::vector<QScalar> act(const UqElement& u, const std::vector<QScalar>& x) const;
  // coordinates of a Verma vector's image
  std::vector<QScalar> project(const ModuleVector& v) const;
  // Gram matrix of the contravariant form on the chosen basis
  const Matrix& gram() const { return gram_; }
  // contravariant form <F^a 1, F^b 1> on the Verma module
  QScalar shapovalov(const RootExps& a, const RootExps& b) const;

 private:
  Matrix generator_matrix(const Generator& g) const;

  const UqAlgebra& U_;
  Weight lambda_;
  VermaModule verma_;
  int top_height_ = 0;
  std::vector<RootExps> basis_;
  std::vector<Weight> weights_;
  // per weight offset: basis indices, all monomials, and inverse Gram times pairing rows
  struct Block {
    std::vector<size_t> basis_index;
    std::vector<RootExps> monomials;
    Matrix projector;  // basis coords from monomial coords
  };
  std::map<Weight, Block> blocks_;
  Matrix gram_;
  mutable std::mutex mu_;
  mutable std::map<Generator, Matrix> gen_cache_;
};

}  // namespace qflag
