// Command-line front end: single computations and the check suite.
//
//   qflag <subcommand> [options]      (qflag --help lists subcommands)

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qflag/dq.hpp"
#include "qflag/flag_proj.hpp"
#include "qflag/harness.hpp"
#include "qflag/oq.hpp"
#include "qflag/weight_modules.hpp"

using namespace qflag;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string type = "A1";
  int depth = 0;
  int window = 0;
  unsigned seed = 1;
  std::string json_out;
  std::string q_eval;
};

CartanType cartan(const Globals& g) { return parse_cartan_type(g.type); }

Weight parse_weight(const std::string& s, int rank) {
  std::vector<int> c;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) c.push_back(std::stoi(part));
  if (static_cast<int>(c.size()) != rank)
    throw std::invalid_argument("weight '" + s + "' needs " + std::to_string(rank) + " coordinate(s)");
  return Weight(c[0], rank > 1 ? c[1] : 0);
}

// integral weight "a[,b]" or formal values "formal:expr;expr"
WeightCharacter parse_character(const std::string& s, const RootDatum& rd) {
  if (s.rfind("formal:", 0) == 0) {
    std::vector<QScalar> vals;
    std::stringstream ss(s.substr(7));
    std::string part;
    while (std::getline(ss, part, ';')) vals.push_back(QScalar::parse(part));
    if (static_cast<int>(vals.size()) != rd.rank()) throw std::invalid_argument("formal character needs one value per omega_i");
    return WeightCharacter::formal(vals);
  }
  return WeightCharacter::integral(parse_weight(s, rd.rank()));
}

std::optional<mpq_class> parse_q_eval(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::string v = s.rfind("v=", 0) == 0 ? s.substr(2) : s;
  mpq_class p(v);
  p.canonicalize();
  if (p == 0) throw std::invalid_argument("--q-eval: point must be nonzero");
  return p;
}

void write_json(const Globals& g, const std::string& text) {
  if (g.json_out.empty()) return;
  if (g.json_out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.json_out);
  if (!out) throw std::runtime_error("cannot write " + g.json_out);
  out << text;
}

void write_json(const Globals& g, const json& j) { write_json(g, j.dump(2) + "\n"); }

int report_exit(const Globals& g, const std::vector<CheckReport>& rs) {
  json arr = json::array();
  int code = 0;
  for (const auto& r : rs) {
    std::cout << summary_line(r) << "\n";
    for (size_t i = 0; i < r.notes.size() && i < 8; ++i) std::cout << "      " << r.notes[i] << "\n";
    if (r.notes.size() > 8) std::cout << "      ... " << r.notes.size() - 8 << " more notes\n";
    arr.push_back(json::parse(to_json(r)));
    if (r.status == Status::Fail) code = 1;
    else if (r.status == Status::Unknown && code == 0) code = 3;
  }
  write_json(g, rs.size() == 1 ? arr[0] : arr);
  return code;
}

std::string scalar_list(const std::vector<QScalar>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.to_string();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum flag variety computations and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--type", g.type, "root datum: A1 or A2")->check(CLI::IsMember({"A1", "A2"}));
  app.add_option("--depth", g.depth, "Verma truncation depth (0: default)");
  app.add_option("--window", g.window, "O_q window (0: default)");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--json", g.json_out, "write JSON to this file ('-' for stdout)");
  app.add_option("--q-eval", g.q_eval, "numeric specialization v=VALUE");

  std::function<int()> run;

  auto* rel = app.add_subcommand("verify-relations", "defining relations and confluence trials");
  int trials = 200;
  rel->add_option("--trials", trials);
  rel->callback([&] { run = [&] { return report_exit(g, {check_relations(cartan(g), trials, g.seed)}); }; });

  auto* verma = app.add_subcommand("verma", "weight spaces of a truncated Verma module");
  std::string lambda = "0";
  verma->add_option("--lambda", lambda, "a[,b] or formal:expr[;expr]");
  verma->callback([&] {
    run = [&] {
      const UqAlgebra& U = UqAlgebra::get(cartan(g));
      const RootDatum& rd = U.datum();
      VermaModule M(U, parse_character(lambda, rd), g.depth > 0 ? g.depth : 4);
      json j;
      j["lambda"] = M.highest().to_string(rd);
      j["depth"] = M.depth();
      j["spaces"] = json::array();
      std::cout << "M_" << M.highest().to_string(rd) << " to depth " << M.depth() << ", dimension " << M.dimension()
                << "\n";
      for (const auto& [off, monos] : M.weight_spaces()) {
        std::cout << "  offset " << to_string(off, rd.rank()) << ": dim " << monos.size() << " (partition "
                  << rd.kostant_partition(off) << ")\n";
        j["spaces"].push_back({{"offset", to_string(off, rd.rank())}, {"dim", monos.size()},
                               {"partition", rd.kostant_partition(off)}});
      }
      write_json(g, j);
      return 0;
    };
  });

  auto* chi = app.add_subcommand("chi", "central character chi_lambda");
  std::string other;
  chi->add_option("--lambda", lambda, "a[,b] or formal:expr[;expr]");
  chi->add_option("--compare", other, "second character to compare with");
  chi->callback([&] {
    run = [&] {
      const UqAlgebra& U = UqAlgebra::get(cartan(g));
      const RootDatum& rd = U.datum();
      auto lam = parse_character(lambda, rd);
      auto c = central_character(U, lam);
      std::cout << "chi_" << lam.to_string(rd) << " = (" << scalar_list(c) << ")\n";
      json j;
      j["lambda"] = lam.to_string(rd);
      std::vector<std::string> cs;
      for (const auto& x : c) cs.push_back(x.to_string());
      j["values"] = cs;
      if (!other.empty()) {
        bool eq = chi_equal(U, lam, parse_character(other, rd));
        std::cout << "equal to chi_" << other << ": " << (eq ? "yes" : "no") << "\n";
        j["equal"] = eq;
      }
      if (auto p = parse_q_eval(g.q_eval)) {
        std::vector<std::string> ev;
        for (const auto& x : c) {
          try {
            ev.push_back(U.field().evaluate(x, *p).value.get_str());
          } catch (const PoleError&) {
            ev.push_back("pole");
          }
        }
        std::cout << "at v = " << p->get_str() << ":";
        for (const auto& e : ev) std::cout << " " << e;
        std::cout << "\n";
        j["specialized"] = ev;
      }
      write_json(g, j);
      return 0;
    };
  });

  auto* dom = app.add_subcommand("dominance", "dominance and regular dominance of a character");
  int bound = 6;
  dom->add_option("--lambda", lambda, "a[,b] or formal:expr[;expr]");
  dom->add_option("--bound", bound, "search bound");
  dom->callback([&] {
    run = [&] {
      const UqAlgebra& U = UqAlgebra::get(cartan(g));
      const RootDatum& rd = U.datum();
      auto lam = parse_character(lambda, rd);
      auto d = is_dominant(U, lam, bound);
      auto s = dominance_chi_search(U, lam, bound);
      auto reg = is_regular_dominant(U, lam, std::min(bound, 4));
      std::cout << "dominant: " << to_string(d.answer) << " (" << d.certificate << ")\n"
                << "chi-search: " << to_string(s.answer) << " (" << s.certificate << ")\n"
                << "regular dominant: " << to_string(reg.answer) << " (" << reg.certificate << ")\n";
      write_json(g, json{{"lambda", lam.to_string(rd)},
                         {"dominant", to_string(d.answer)},
                         {"chi_search", to_string(s.answer)},
                         {"chi_search_certificate", s.certificate},
                         {"regular_dominant", to_string(reg.answer)}});
      return 0;
    };
  });

  auto* sec = app.add_subcommand("sections", "windowed global sections of O_q(n) (A1)");
  int n = 0;
  sec->add_option("--n", n, "line bundle degree")->required();
  sec->callback([&] {
    run = [&] {
      int window = g.window > 0 ? g.window : std::abs(n) + 2;
      auto r = line_bundle_sections(n, window);
      std::cout << "dim Gamma(O_q(" << n << ")) = " << r.dim << " at window " << window
                << (r.certified ? " (certified)" : " (uncertified: " + r.warning + ")") << "\n";
      std::vector<std::string> basis;
      for (const auto& s : r.basis) {
        basis.push_back(OqSL2::get().to_string(s[0]));
        std::cout << "  " << basis.back() << "\n";
      }
      write_json(g, json{{"n", n}, {"window", window}, {"dim", r.dim}, {"certified", r.certified},
                         {"warning", r.warning}, {"basis", basis}});
      return r.certified ? 0 : 3;
    };
  });

  auto* nu = app.add_subcommand("nu", "nu_j = dim Gamma(gr_j D^lambda)");
  int max_j = 3;
  nu->add_option("--lambda", lambda, "a[,b] or formal:expr[;expr]");
  nu->add_option("--max-j", max_j);
  nu->callback([&] {
    run = [&] {
      const UqAlgebra& U = UqAlgebra::get(cartan(g));
      auto lam = parse_character(lambda, U.datum());
      std::vector<long> vals;
      for (int j = 0; j <= max_j; ++j) vals.push_back(gamma_dlambda_graded_dim(U, lam, j));
      std::cout << "nu(" << lam.to_string(U.datum()) << ") =";
      for (long x : vals) std::cout << " " << x;
      std::cout << "\n";
      write_json(g, json{{"lambda", lam.to_string(U.datum())}, {"nu", vals}});
      return 0;
    };
  });

  auto* munu = app.add_subcommand("mu-nu", "nu_j against the q = 1 reference mu_j(1) (A1)");
  std::string lambdas = "0;2;4", reference;
  munu->add_option("--lambdas", lambdas, "dominant weights separated by ';'");
  munu->add_option("--max-j", max_j);
  munu->add_option("--reference", reference, "reference table (default: shipped data)");
  munu->callback([&] {
    run = [&] {
      std::vector<Weight> ls;
      std::stringstream ss(lambdas);
      std::string part;
      while (std::getline(ss, part, ';')) ls.push_back(parse_weight(part, 1));
      return report_exit(g, {check_mu_nu(ls, max_j, reference.empty() ? default_mu_reference_path() : reference)});
    };
  });

  auto* f1 = app.add_subcommand("filt1", "splitting maps V (x) F -> V^triv (x) F and p*(V|B) -> p*(V^triv) (A1)");
  int dimv = 2, k = 0, mu = 1;
  f1->add_option("--dim", dimv, "dimension of V")->check(CLI::Range(1, 4));
  f1->add_option("--twist", k, "F = O_q(k)");
  f1->add_option("--mu", mu, "mu = m omega for the pi-map");
  f1->callback([&] {
    run = [&] {
      int window = g.window > 0 ? g.window : 3;
      return report_exit(g, {check_filt1(dimv - 1, k, window), check_filt1_pi(k, mu, +1, window),
                             expect_failure(check_filt1_pi(k, mu, -1, window))});
    };
  });

  auto* f2 = app.add_subcommand("filt2", "central character separations for V (x) F");
  std::string module = "1";
  std::string part = "ab";
  f2->add_option("--lambda", lambda, "a[,b] or formal:expr[;expr]");
  f2->add_option("--module", module, "highest weight of V");
  f2->add_option("--part", part, "a, b or ab");
  f2->callback([&] {
    run = [&] {
      CartanType t = cartan(g);
      const RootDatum& rd = RootDatum::get(t);
      auto lam = parse_character(lambda, rd);
      std::vector<CheckReport> rs;
      for (char p : part) rs.push_back(check_filt2_separation(t, lam, parse_weight(module, rd.rank()), p, parse_q_eval(g.q_eval)));
      return report_exit(g, rs);
    };
  });

  auto* rr = app.add_subcommand("repring", "the graded ring A and its braiding");
  std::string left = "1", right = "1";
  int samples = 50;
  rr->add_option("--lambda", left, "first degree");
  rr->add_option("--mu", right, "second degree");
  rr->add_option("--samples", samples, "random pairs for the braided commutativity check");
  rr->callback([&] {
    run = [&] {
      CartanType t = cartan(g);
      const RepRing& A = RepRing::get(t);
      Weight l = parse_weight(left, A.rank()), m = parse_weight(right, A.rank());
      if (!A.in_window(l) || !A.in_window(m) || !A.in_window(l + m))
        throw std::invalid_argument("degrees outside the table bound " + std::to_string(A.bound()));
      const Matrix& mult = A.multiplication(l, m);
      json j;
      j["type"] = to_string(t);
      if (t == CartanType::A1) {
        std::cout << "relation: " << A.relation_string() << "\n";
        j["relation"] = A.relation_string();
      }
      std::cout << "dim A" << to_string(l, A.rank()) << " = " << A.dim(l) << ", dim A" << to_string(m, A.rank())
                << " = " << A.dim(m) << ", product into dim " << A.dim(l + m) << "\n";
      std::vector<std::string> products;
      for (size_t a = 0; a < A.dim(l); ++a)
        for (size_t b = 0; b < A.dim(m); ++b) {
          std::string s;
          for (size_t r = 0; r < mult.rows(); ++r) {
            const QScalar& c = mult.at(r, a * A.dim(m) + b);
            if (c.is_zero()) continue;
            s += (s.empty() ? "" : " + ") + ("[" + c.to_string() + "]*" + A.basis_label(l + m, r));
          }
          products.push_back(A.basis_label(l, a) + " . " + A.basis_label(m, b) + " = " + (s.empty() ? "0" : s));
          std::cout << "  " << products.back() << "\n";
        }
      j["products"] = products;
      auto br = check_braided_commutativity(t, samples, g.seed);
      std::cout << "m o sigma = m on " << br.pairs_checked << " random pairs: " << (br.passed() ? "yes" : "no") << "\n";
      for (const auto& c : br.counterexamples) std::cout << "  " << c << "\n";
      j["braided_pairs"] = br.pairs_checked;
      j["braided_counterexamples"] = br.counterexamples;
      write_json(g, j);
      return br.passed() ? 0 : 1;
    };
  });

  auto* suite = app.add_subcommand("run-suite", "run the check suite from a key = value config");
  std::string config_path;
  int workers = 0;
  bool timing = false;
  suite->add_option("--config", config_path, "config file (default: all checks for --type)");
  suite->add_option("--workers", workers, "worker threads (overrides the config)");
  suite->add_flag("--timing", timing, "include runtimes in the JSON report");
  suite->callback([&] {
    run = [&] {
      SuiteConfig c;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot read " + config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
          c = parse_suite_config(ss.str());
        } catch (const ConfigError& e) {
          std::cerr << config_path << ": " << e.what() << "\n";
          return 2;
        }
      } else {
        c = default_config(cartan(g));
      }
      if (app.get_option("--seed")->count()) c.seed = g.seed;
      if (g.depth > 0) c.depth = g.depth;
      if (g.window > 0) c.window = g.window;
      if (!g.q_eval.empty()) c.q_eval = parse_q_eval(g.q_eval);
      if (workers > 0) c.workers = workers;
      SuiteReport r = run_suite(c);
      std::cout << summary(r);
      write_json(g, to_json(r, timing));
      return r.passed() ? 0 : 1;
    };
  });

  auto* dqm = app.add_subcommand("dq-mult", "product in the smash product D_q (A1)");
  std::vector<std::string> factors;
  dqm->add_option("factors", factors, "expressions in a, b, c, d, E, F, K(n)")->required();
  dqm->callback([&] {
    run = [&] {
      DqElement x = dq_parse("1");
      for (const auto& f : factors) x = dq_multiply(x, dq_parse(f));
      std::cout << to_string(x) << "\n";
      write_json(g, json{{"factors", factors}, {"product", to_string(x)}});
      return 0;
    };
  });

  auto* dl = app.add_subcommand("dlambda", "class of an element of D_q in D_q^lambda (A1)");
  std::string expr;
  dl->add_option("expr", expr, "expression in a, b, c, d, E, F, K(n)")->required();
  dl->add_option("--lambda", lambda, "a or formal:expr");
  dl->callback([&] {
    run = [&] {
      const RootDatum& rd = RootDatum::get(CartanType::A1);
      auto lam = parse_character(lambda, rd);
      DlambdaClass c = dlambda_reduce(dq_parse(expr), lam);
      std::cout << to_string(c) << "\n";
      write_json(g, json{{"lambda", lam.to_string(rd)}, {"input", expr}, {"class", to_string(c)}});
      return 0;
    };
  });

  auto* tw = app.add_subcommand("twist-test", "twists and torsion of graded A-modules");
  tw->callback([&] {
    run = [&] {
      CartanType t = cartan(g);
      const RepRing& A = RepRing::get(t);
      int window = g.window > 0 ? std::min(g.window, A.bound()) : A.bound();
      GradedAModule M = GradedAModule::ring(A, window);
      bool ok = true;
      json j;
      for (int i = 0; i < A.rank(); ++i) {
        bool inverse = same_module(twist(twist(M, i), i, -1), M);
        bool power = same_module(twist(twist(M, i), i), twist(M, i, 2));
        std::cout << "twist " << i << ": (M(i))(-i) = M " << (inverse ? "yes" : "no") << ", M(i)(i) = M(2i) "
                  << (power ? "yes" : "no") << "\n";
        ok = ok && inverse && power;
      }
      if (A.rank() == 2) {
        bool commute = same_module(twist(twist(M, 0), 1), twist(twist(M, 1), 0));
        std::cout << "twists commute: " << (commute ? "yes" : "no") << "\n";
        ok = ok && commute;
      }
      bool t_ring = is_torsion(A, M, 1), t_point = is_torsion(A, GradedAModule::concentrated(A.rank(), 1), 1);
      std::cout << "A torsion: " << (t_ring ? "yes" : "no") << ", k concentrated in degree 0 torsion: "
                << (t_point ? "yes" : "no") << "\n";
      ok = ok && !t_ring && t_point;
      j["window"] = window;
      j["passed"] = ok;
      write_json(g, j);
      return ok ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
