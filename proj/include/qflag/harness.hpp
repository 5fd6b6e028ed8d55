#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qflag/oq.hpp"
#include "qflag/root_datum.hpp"

namespace qflag {

enum class Status { Pass, Fail, Unknown };
std::string to_string(Status s);

struct CheckReport {
  std::string id;
  std::string datum;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Unknown;
  // failures: concrete counterexamples; unknown: the window that was too small
  std::vector<std::string> witness;
  // logged data that is not a verdict (derived relations, specializations)
  std::vector<std::string> notes;
  // pass means the configured input failed the underlying check, as it must
  bool negative_control = false;
  double runtime = 0;  // seconds, not part of the reproducible JSON
};

// a negative control: passes when r failed, fails when r passed
CheckReport expect_failure(CheckReport r);

// ---------------------------------------------------------------------------
// module invariant checks

// defining relations reduce to 0; random words agree with a random-order rewriter
CheckReport check_relations(CartanType t, int trials, unsigned seed);
// counit, antipode, coassociativity on generators and random elements
CheckReport check_hopf(CartanType t, int samples, unsigned seed);
// weight spaces of truncated Verma modules against the partition function
CheckReport check_verma(CartanType t, int depth);
// chi_lambda = chi_{w lambda} for integral lambda in the coordinate box
CheckReport check_chi_symmetry(CartanType t, int box);
// chi-search dominance against the classical criterion
CheckReport check_dominance(CartanType t, int box, int bound);
// a non-dominant weight must be refuted with a verified coincidence
CheckReport check_dominance_negative(CartanType t, const Weight& lambda, int bound);
// A1: dim Gamma(O_q(n)) = max(n + 1, 0), certified at window |n| + extra
CheckReport check_sections(int n_min, int n_max, int extra);

// ---------------------------------------------------------------------------
// Splitting maps: V (x) F -> V^triv (x) F and p*(V|B) -> p*(V^triv), V = V_n,
// F = O_q(k), on O_q-monomials of degree <= window

struct SplittingMaps {
  int n = 1;
  int k = 0;
  // v (x) f -> v_1 (x) v_2 f and inverse v (x) f -> v_1 (x) S(v_2) f
  SectionVector theta(const SectionVector& x) const;
  SectionVector theta_inverse(const SectionVector& x) const;
  // a (x) v -> a v_2 (x) v_1 and inverse a (x) v -> a S^-1(v_2) (x) v_1
  SectionVector phi(const SectionVector& x) const;
  SectionVector phi_inverse(const SectionVector& x) const;
  // V (x) F with the diagonal coaction (V leg first) and V^triv (x) F
  CoactImage coact_diagonal(const SectionVector& x) const;
  CoactImage coact_trivial(const SectionVector& x) const;
};

CheckReport check_filt1(int n, int k, int window);
// pi(f) = q^{sign <mu, phi>} 1 (x) f (x) 1 : F -> k_mu (x) F (x) k_{-mu} for
// F = O_q(k), mu = m omega, phi the torus weight of f
CheckReport check_filt1_pi(int k, int m, int sign, int window);
// negative control: the displayed map read as V^triv (x) F -> V (x) F does not intertwine
CheckReport check_filt1_swapped(int n, int k, int window);

// ---------------------------------------------------------------------------
// Central character separations for V = V_highest with weights mu_0 > mu_1 > ... (ordered by <mu, rho>)

// part 'a': chi_{-lambda} != chi_{-lambda - mu_0 + mu_i}, i != 0
// part 'b': chi_{-lambda + mu_n} != chi_{-lambda + mu_i}, i != n
CheckReport check_filt2_separation(CartanType t, const WeightCharacter& lambda, const Weight& highest, char part,
                                   const std::optional<mpq_class>& q_eval = std::nullopt);

// ---------------------------------------------------------------------------
// nu_j = dim Gamma(p*(gr_j M_lambda)) against the q = 1 reference mu_j(1)

std::vector<long> read_mu_reference(const std::string& path);
std::string default_mu_reference_path();
CheckReport check_mu_nu(const std::vector<Weight>& lambdas, int J, const std::string& reference_path);

// ---------------------------------------------------------------------------

// m o sigma = m (A1 exhaustive to max_total, random pairs otherwise) and the solved relation
CheckReport check_braided(CartanType t, int samples, unsigned seed, int max_total);
// negative control: the literal braiding normalization admits no quantum plane
CheckReport check_braided_literal();
// A1 smash product associativity and D_q^lambda reductions
CheckReport check_smash(int trials, unsigned seed);

// ---------------------------------------------------------------------------
// suite runner

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& field, const std::string& msg);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct SuiteConfig {
  CartanType type = CartanType::A1;
  std::vector<std::string> checks;  // check groups, in the order given
  unsigned seed = 1;
  int workers = 1;
  int depth = 0;  // 0: 8 for A1, 5 for A2
  int window = 6;
  int samples = 50;
  int trials = 200;
  int box = 5;
  int bound = 6;
  int mu_nu_max_j = 3;
  std::vector<Weight> mu_nu_lambdas;  // empty: 0, 2 omega, 4 omega
  std::optional<Weight> filt2_lambda;  // empty: rho
  bool negative_controls = true;
  std::optional<mpq_class> q_eval;
  std::string mu_reference;  // empty: shipped data file
};

std::vector<std::string> available_checks(CartanType t);
SuiteConfig default_config(CartanType t);
// key = value lines, '#' comments; throws ConfigError with line and field
SuiteConfig parse_suite_config(const std::string& text);

struct SuiteReport {
  std::string type;
  unsigned seed = 0;
  std::vector<CheckReport> reports;  // sorted by id
  bool passed() const;
};

// one job per check group on a queue served by config.workers threads
SuiteReport run_suite(const SuiteConfig& config);
// byte-identical for identical config and seed unless timing is requested
std::string to_json(const SuiteReport& r, bool timing = false);
std::string to_json(const CheckReport& r, bool timing = false);
std::string summary(const SuiteReport& r);
std::string summary_line(const CheckReport& r);

}  // namespace qflag
