#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "matrix_rep.hpp"
#include "qflag/uq_algebra.hpp"
#include "qflag/confluence.hpp"
#include "qflag/hopf_checks.hpp"

using namespace qflag;
using namespace qflag::testing;

namespace {

const UqAlgebra& U1() { return UqAlgebra::get(CartanType::A1); }
const UqAlgebra& U2() { return UqAlgebra::get(CartanType::A2); }

}  // namespace

TEST_CASE("normal form examples", "[uq]") {
  const UqAlgebra& U = U1();
  const QField& f = U.field();
  Weight al = U.datum().simple_root(0);
  UqElement ef = U.normal_form({Generator::E(0), Generator::F(0)});
  UqElement expected = U.multiply(U.F(0), U.E(0)) + (U.K(al) - U.K(-al)).scaled(f.q_diff_inv());
  CHECK(ef == expected);
  CHECK(U.normal_form({Generator::K(Weight())}) == U.one());
  UqElement kek = U.normal_form({Generator::K(Weight(1)), Generator::E(0), Generator::K(Weight(-1))});
  CHECK(kek == U.E(0).scaled(f.q()));
  CHECK(U.multiply(U.K(Weight(1)), U.K(Weight(1))) == U.K(Weight(2)));
  CHECK(U.multiply(U.one(), ef) == ef);
  UqElement f2 = U.multiply(U.F(0), U.F(0));
  CHECK(U.multiply(U.E(0), f2) == U.normal_form({Generator::E(0), Generator::F(0), Generator::F(0)}));
  CHECK(U.to_string(ef) == U.to_string(expected));
  CHECK(U.parse("E*F - F*E") == (U.K(al) - U.K(-al)).scaled(f.q_diff_inv()));
}

TEST_CASE("defining relations reduce to zero", "[uq]") {
  for (const UqAlgebra* U : {&U1(), &U2()}) {
    const RootDatum& rd = U->datum();
    const QField& f = U->field();
    for (int i = 0; i < rd.rank(); ++i) {
      Weight ai = rd.simple_root(i);
      for (int j = 0; j < rd.rank(); ++j) {
        UqElement c = U->commutator(U->E(i), U->F(j));
        if (i == j) c -= (U->K(ai) - U->K(-ai)).scaled(f.q_diff_inv());
        CHECK(c.is_zero());
      }
      for (Weight mu : {Weight(1, 0), Weight(0, 1), Weight(-2, 1)}) {
        if (rd.rank() == 1) mu[1] = 0;
        QScalar s = f.q_pow(rd.pairing(mu, ai));
        UqElement ke = U->multiply(U->multiply(U->K(mu), U->E(i)), U->K(-mu));
        CHECK(ke == U->E(i).scaled(s));
        UqElement kf = U->multiply(U->multiply(U->K(mu), U->F(i)), U->K(-mu));
        CHECK(kf == U->F(i).scaled(s.inverse()));
      }
    }
    if (rd.rank() == 2) {
      // quantum Serre relations in both directions, E and F
      QScalar two = f.q_int(2);
      for (auto gen : {&UqAlgebra::E, &UqAlgebra::F})
        for (int i = 0; i < 2; ++i) {
          int j = 1 - i;
          UqElement xi = (U->*gen)(i), xj = (U->*gen)(j);
          UqElement s = U->multiply(U->multiply(xi, xi), xj);
          s.add(U->multiply(U->multiply(xi, xj), xi), -two);
          s.add(U->multiply(U->multiply(xj, xi), xi), 1);
          CHECK(s.is_zero());
        }
      // composite root vectors are the braided commutators
      QScalar qi = f.q_pow(-1);
      UqElement e12 = U->multiply(U->E(0), U->E(1));
      e12.add(U->multiply(U->E(1), U->E(0)), -qi);
      CHECK(e12 == U->root_E(1));
      UqElement f12 = U->multiply(U->F(0), U->F(1));
      f12.add(U->multiply(U->F(1), U->F(0)), -qi);
      CHECK(f12 == U->root_F(1));
    }
  }
}

TEST_CASE("confluence under random rewriting orders", "[uq][property]") {
  std::mt19937 rng(1234);
  int trials = 0;
  for (const UqAlgebra* U : {&U1(), &U2()}) {
    for (int t = 0; t < 100; ++t, ++trials) {
      Word w = random_word(*U, rng, 6);
      UqElement engine = U->normal_form(w);
      for (uint32_t seed : {1u, 2u, 3u}) {
        CHECK(random_order_normal_form(*U, w, seed + 17 * t) == engine);
      }
    }
  }
  CHECK(trials == 200);
}

TEST_CASE("engine products agree with explicit matrices", "[uq][property]") {
  std::mt19937 rng(99);
  const UqAlgebra& U = U2();
  MatRep v = a2_natural(U), d = a2_dual(U);
  MatRep vd = tensor(v, d);
  MatRep vv = tensor(v, v);
  for (const MatRep* rep : {&v, &d, &vd, &vv}) {
    // root-vector table entries
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        CHECK(rep->of(U.commutator(U.root_E(r), U.root_F(s))) ==
              rep->root(true, r) * rep->root(false, s) - rep->root(false, s) * rep->root(true, r));
    for (int i = 0; i < 12; ++i) {
      UqElement x = random_element(U, rng, 3), y = random_element(U, rng, 3);
      CHECK(rep->of(U.multiply(x, y)) == rep->of(x) * rep->of(y));
    }
  }
  const UqAlgebra& A = U1();
  MatRep w = tensor(tensor(a1_natural(A), a1_adjoint(A)), a1_natural(A));
  for (int i = 0; i < 20; ++i) {
    UqElement x = random_element(A, rng, 3), y = random_element(A, rng, 3);
    CHECK(w.of(A.multiply(x, y)) == w.of(x) * w.of(y));
  }
}

TEST_CASE("associativity", "[uq][property]") {
  std::mt19937 rng(5);
  for (const UqAlgebra* U : {&U1(), &U2()})
    for (int i = 0; i < 25; ++i) {
      UqElement x = random_element(*U, rng, 3), y = random_element(*U, rng, 3), z = random_element(*U, rng, 3);
      CHECK(U->multiply(U->multiply(x, y), z) == U->multiply(x, U->multiply(y, z)));
    }
}

TEST_CASE("Hopf structure", "[uq][property]") {
  std::mt19937 rng(11);
  for (const UqAlgebra* U : {&U1(), &U2()}) {
    const RootDatum& rd = U->datum();
    CHECK(U->coproduct(U->K(Weight(1))) == UqTensor({PbwMonomial{{}, Weight(1), {}}, PbwMonomial{{}, Weight(1), {}}}));
    for (int i = 0; i < rd.rank(); ++i) CHECK(U->counit(U->E(i)).is_zero());
    std::vector<UqElement> samples;
    for (int r = 0; r < rd.num_positive_roots(); ++r) {
      samples.push_back(U->root_E(r));
      samples.push_back(U->root_F(r));
    }
    samples.push_back(U->K(Weight(1, rd.rank() > 1 ? -1 : 0)));
    for (int i = 0; i < 25; ++i) samples.push_back(random_element(*U, rng, 3));
    for (const auto& x : samples) {
      UqTensor dx = U->coproduct(x);
      CHECK(hopf_counit_left(*U, dx) == x);
      CHECK(hopf_counit_right(*U, dx) == x);
      CHECK(hopf_antipode_left(*U, dx) == U->scalar(U->counit(x)));
      CHECK(hopf_antipode_right(*U, dx) == U->scalar(U->counit(x)));
      CHECK(coassoc_left(*U, dx) == coassoc_right(*U, dx));
    }
    for (int i = 0; i < 10; ++i) {
      UqElement x = random_element(*U, rng, 3), y = random_element(*U, rng, 3);
      CHECK(U->coproduct(U->multiply(x, y)) == U->tensor_multiply(U->coproduct(x), U->coproduct(y)));
      CHECK(U->antipode(U->multiply(x, y)) == U->multiply(U->antipode(y), U->antipode(x)));
    }
  }
}

TEST_CASE("adjoint action", "[uq]") {
  const UqAlgebra& U = U1();
  const QField& f = U.field();
  Weight al = U.datum().simple_root(0);
  UqElement F = U.F(0), E = U.E(0);
  CHECK(U.adjoint_act(U.one(), F) == F);
  Weight mu(1);
  CHECK(U.adjoint_act(U.K(mu), F) == F.scaled(f.q_pow(-U.datum().pairing(mu, al))));
  // ad(E)(K_-alpha) = E K_-alpha - K_alpha K_-alpha K_-alpha E, expanded by hand
  UqElement lhs = U.adjoint_act(E, U.K(-al));
  UqElement oracle = U.multiply(E, U.K(-al)) - U.multiply(U.multiply(U.K(al), U.K(-al)), U.multiply(U.K(-al), E));
  CHECK(lhs == oracle);
  CHECK_FALSE(lhs.is_zero());

  std::mt19937 rng(8);
  for (const UqAlgebra* A : {&U1(), &U2()}) {
    for (int i = 0; i < 8; ++i) {
      UqElement u = random_element(*A, rng, 2), u2 = random_element(*A, rng, 2), v = random_element(*A, rng, 2);
      CHECK(A->adjoint_act(A->multiply(u, u2), v) == A->adjoint_act(u, A->adjoint_act(u2, v)));
    }
    // module algebra on generators
    const RootDatum& rd = A->datum();
    for (int r = 0; r < rd.num_positive_roots(); ++r)
      for (const UqElement& u : {A->root_E(r), A->root_F(r), A->K(Weight(1))}) {
        UqElement v = random_element(*A, rng, 2), w = random_element(*A, rng, 2);
        UqElement rhs;
        for (const auto& [k, c] : A->coproduct(u))
          rhs.add(A->multiply(A->adjoint_act(UqElement(k[0]), v), A->adjoint_act(UqElement(k[1]), w)), c);
        CHECK(A->adjoint_act(u, A->multiply(v, w)) == rhs);
      }
  }
}

TEST_CASE("filtration degree", "[uq]") {
  const UqAlgebra& U = U1();
  Weight al = U.datum().simple_root(0);
  CHECK(U.filtration_degree(U.multiply(U.multiply(U.F(0), U.K(Weight(-1))), U.E(0))) == 3);
  CHECK(U.filtration_degree(U.multiply(U.multiply(U.F(0), U.K(-al)), U.E(0))) == 4);
  CHECK(U.filtration_degree(U.one()) == 0);
  CHECK(U.filtration_degree(U.K(al)) == -2);
  CHECK_THROWS_AS(U.filtration_degree(UqElement()), std::domain_error);

  // every relation is filtration compatible: the degree of a word is the sum of
  // generator degrees and the normal form never exceeds it
  std::mt19937 rng(21);
  for (const UqAlgebra* A : {&U1(), &U2()}) {
    for (int t = 0; t < 60; ++t) {
      Word w = random_word(*A, rng, 5);
      int deg = 0;
      for (const auto& g : w)
        deg += A->monomial_degree(A->generator(g).begin()->first);
      UqElement nf = A->normal_form(w);
      if (!nf.is_zero()) CHECK(A->filtration_degree(nf) <= deg);
    }
    for (int t = 0; t < 40; ++t) {
      UqElement x = random_element(*A, rng, 3), y = random_element(*A, rng, 3);
      UqElement p = A->multiply(x, y);
      if (!p.is_zero()) CHECK(A->filtration_degree(p) <= A->filtration_degree(x) + A->filtration_degree(y));
      // equality on monomial pairs
      PbwMonomial a = x.begin()->first, b = y.begin()->first;
      CHECK(A->filtration_degree(A->mono_multiply(a, b)) == A->monomial_degree(a) + A->monomial_degree(b));
    }
  }
}

TEST_CASE("graded piece dimensions", "[uq]") {
  const UqAlgebra& U = U1();
  // degree 0, |k| <= 1: K_0 (1); K_1 with F^a E^b, a + b = 1 (2); K_-1 with a + b = -1 (0)
  CHECK(U.graded_piece_dim(0, 1) == 3);
  CHECK(U.graded_piece_dim(-5, 2) == 0);
}

TEST_CASE("ad orbit probe", "[uq]") {
  const UqAlgebra& U = U1();
  Weight al = U.datum().simple_root(0);
  CHECK(U.ad_orbit_probe(U.one(), 3) == std::make_pair(1, true));
  auto [d, stable] = U.ad_orbit_probe(U.K(-al), 4);
  CHECK(stable);
  CHECK(d == 4);
  CHECK_FALSE(U.ad_orbit_probe(U.K(al), 6).second);
}
