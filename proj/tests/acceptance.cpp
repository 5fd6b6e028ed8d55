// One line per acceptance criterion; exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qflag/flag_proj.hpp"
#include "qflag/harness.hpp"

using namespace qflag;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// merge reports: fails on any non-pass, detail from the first failure or the last note
void absorb(Outcome& o, const CheckReport& r) {
  if (r.status != Status::Pass) {
    if (o.pass) o.detail = r.id + ": " + (r.witness.empty() ? to_string(r.status) : r.witness.front());
    o.pass = false;
  }
}

int failures = 0;

void criterion(int n, const std::string& name, double budget, const std::function<Outcome()>& f) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget > 0 && secs > budget) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the ") + std::to_string(static_cast<int>(budget)) +
                " s budget";
  }
  failures += !o.pass;
  std::printf("[%s] %2d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

const CartanType kTypes[] = {CartanType::A1, CartanType::A2};

}  // namespace

int main() {
  auto total_start = Clock::now();

  criterion(1, "presentation soundness: relations reduce to 0, 200 confluence trials", 10, [] {
    Outcome o;
    for (auto t : kTypes) absorb(o, check_relations(t, 100, 11));
    if (o.pass) o.detail = "A1 and A2 incl. quantum Serre, 100 trials each";
    return o;
  });

  criterion(2, "Hopf axioms on generators and 50 random elements", 30, [] {
    Outcome o;
    for (auto t : kTypes) absorb(o, check_hopf(t, 50, 12));
    return o;
  });

  criterion(3, "Verma weight spaces match the partition function (depth 8 A1, 5 A2)", 0, [] {
    Outcome o;
    absorb(o, check_verma(CartanType::A1, 8));
    absorb(o, check_verma(CartanType::A2, 5));
    return o;
  });

  criterion(4, "chi_lambda = chi_{w lambda} for |coordinates| <= 5", 0, [] {
    Outcome o;
    for (auto t : kTypes) absorb(o, check_chi_symmetry(t, 5));
    return o;
  });

  criterion(5, "chi-based dominance agrees with the classical criterion (bound 6)", 0, [] {
    Outcome o;
    for (auto t : kTypes) {
      absorb(o, check_dominance(t, 5, 6));
      absorb(o, check_dominance_negative(t, -RootDatum::get(t).omega(0), 6));
    }
    return o;
  });

  criterion(6, "dim Gamma(O_q(n)) = n + 1 for 0 <= n <= 6, 0 for -4 <= n <= -1, certified", 0, [] {
    Outcome o;
    CheckReport r = check_sections(-4, 6, 2);
    absorb(o, r);
    if (o.pass) o.detail = r.notes.back();
    return o;
  });

  criterion(7, "splitting maps are inverse bijections intertwining coactions (dim V = 2, 3)", 0, [] {
    Outcome o;
    for (int n : {1, 2})
      for (int k : {-1, 0, 1, 2}) absorb(o, check_filt1(n, k, 3));
    for (int k : {0, 1})
      for (int m : {1, 2}) absorb(o, check_filt1_pi(k, m, +1, 3));
    absorb(o, expect_failure(check_filt1_pi(1, 1, -1, 3)));
    if (o.pass) o.detail = "pi-map with q^{+<mu,phi>}; the opposite sign fails as recorded";
    return o;
  });

  criterion(8, "nu_j = (1, 3, 5, 7) = mu_j(1), independent of lambda in {0, 2w, 4w}", 120, [] {
    Outcome o;
    CheckReport r = check_mu_nu({Weight(0), Weight(2), Weight(4)}, 3, default_mu_reference_path());
    absorb(o, r);
    if (o.pass) o.detail = r.notes.front();
    return o;
  });

  criterion(9, "central character separations at lambda = rho; lambda = 0 part (b) coincidence detected", 0, [] {
    Outcome o;
    for (auto t : kTypes) {
      const RootDatum& rd = RootDatum::get(t);
      auto rho = WeightCharacter::integral(rd.rho());
      std::vector<Weight> vs = t == CartanType::A1 ? std::vector<Weight>{Weight(1), Weight(2)}
                                                   : std::vector<Weight>{Weight(1, 0), Weight(0, 1), Weight(1, 1)};
      for (const auto& v : vs)
        for (char part : {'a', 'b'}) absorb(o, check_filt2_separation(t, rho, v, part));
    }
    CheckReport neg = check_filt2_separation(CartanType::A1, WeightCharacter::integral(Weight(0)), Weight(1), 'b');
    absorb(o, expect_failure(neg));
    if (o.pass) o.detail = "negative control: " + neg.witness.front();
    return o;
  });

  criterion(10, "braided commutativity (A1 exhaustive to degree 5, 50 random A2 pairs)", 0, [] {
    Outcome o;
    CheckReport a = check_braided(CartanType::A1, 50, 21, 5);
    CheckReport b = check_braided(CartanType::A1, 50, 22, 5);
    absorb(o, a);
    absorb(o, check_braided(CartanType::A2, 50, 23, 0));
    absorb(o, check_braided_literal());
    std::string rel = RepRing::get(CartanType::A1).relation_string();
    if (a.notes.front() != b.notes.front()) {
      o.pass = false;
      o.detail = "relation differs between runs";
    }
    if (o.pass) o.detail = "derived relation " + rel;
    return o;
  });

  criterion(11, "smash product associativity (100 triples) and D_q^lambda reductions", 0, [] {
    Outcome o;
    absorb(o, check_smash(100, 31));
    return o;
  });

  criterion(12, "full suite at default windows under 10 minutes", 600, [] {
    Outcome o;
    double secs = 0;
    for (auto t : kTypes) {
      SuiteConfig c = default_config(t);
      SuiteReport r = run_suite(c);
      for (const auto& rep : r.reports) {
        absorb(o, rep);
        secs += rep.runtime;
      }
    }
    if (o.pass) o.detail = "A1 and A2 default suites";
    return o;
  });

  double total = std::chrono::duration<double>(Clock::now() - total_start).count();
  std::printf("%d failing line(s), %.1fs total\n", failures, total);
  return failures == 0 ? 0 : 1;
}
