#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "qflag/root_datum.hpp"

using namespace qflag;

namespace {

const RootDatum& A1() { return RootDatum::get(CartanType::A1); }
const RootDatum& A2() { return RootDatum::get(CartanType::A2); }

// independent count: try every multiplicity vector for the positive roots
long brute_partitions(const RootDatum& rd, const Weight& beta) {
  const auto& roots = rd.positive_roots();
  std::function<long(size_t, Weight)> go = [&](size_t idx, Weight rest) -> long {
    if (idx == roots.size()) return rest.is_zero() ? 1 : 0;
    long n = 0;
    for (int k = 0; k <= 12; ++k) n += go(idx + 1, rest - roots[idx] * k);
    return n;
  };
  return go(0, beta);
}

}  // namespace

TEST_CASE("pairing values", "[root_datum]") {
  CHECK(A1().pairing(A1().simple_root(0), A1().simple_root(0)) == 2);
  CHECK(A1().pairing(Weight(1), Weight(1)) == mpq_class(1, 2));
  CHECK(A2().pairing(A2().simple_root(0), A2().simple_root(1)) == -1);
  for (const RootDatum* rd : {&A1(), &A2()})
    for (int i = 0; i < rd->rank(); ++i) {
      CHECK(rd->pairing(rd->simple_root(i), rd->simple_root(i)) == 2);
      for (int j = 0; j < rd->rank(); ++j)
        CHECK(rd->pairing(rd->omega(i), rd->simple_root(j)) == (i == j ? 1 : 0));
    }
  CHECK(A2().rho() == A2().omega(0) + A2().omega(1));
}

TEST_CASE("Weyl group", "[root_datum]") {
  CHECK(A1().weyl_group().size() == 2);
  CHECK(A2().weyl_group().size() == 6);
  CHECK(A2().longest_element().word.size() == 3);
  WeylElement s;
  s.word = {0};
  CHECK(A1().weyl_act(s, Weight(1)) == Weight(-1));
  CHECK(A2().weyl_act(s, Weight(0, 1)) == Weight(0, 1));
  for (const auto& w : A2().weyl_group())
    CHECK(A2().weyl_act(w, WeightCharacter::integral(Weight(2, -3))) ==
          WeightCharacter::integral(A2().weyl_act(w, Weight(2, -3))));
  // identity
  CHECK(A2().weyl_act(A2().weyl_group()[0], Weight(3, 4)) == Weight(3, 4));
}

TEST_CASE("pairing is W-invariant", "[root_datum][property]") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (const RootDatum* rd : {&A1(), &A2()})
    for (int i = 0; i < 50; ++i) {
      Weight a(d(rng), rd->rank() > 1 ? d(rng) : 0), b(d(rng), rd->rank() > 1 ? d(rng) : 0);
      CHECK(rd->pairing(a, b) == rd->pairing(b, a));
      for (const auto& w : rd->weyl_group()) CHECK(rd->pairing(rd->weyl_act(w, a), rd->weyl_act(w, b)) == rd->pairing(a, b));
    }
}

TEST_CASE("formal characters under W", "[root_datum]") {
  const RootDatum& rd = A2();
  // a formal character that happens to equal q^mu must transform like q^mu
  Weight mu(2, -1);
  auto lam = WeightCharacter::formal(WeightCharacter::integral(mu).omega_values(rd));
  for (const auto& w : rd.weyl_group())
    CHECK(rd.weyl_act(w, lam).omega_values(rd) == WeightCharacter::integral(rd.weyl_act(w, mu)).omega_values(rd));
}

TEST_CASE("dominance and Weyl dimension", "[root_datum]") {
  CHECK(A2().is_dominant_classical(A2().rho()));
  CHECK_FALSE(A1().is_dominant_classical(Weight(-1)));
  CHECK_FALSE(A2().is_dominant_classical(Weight(1, -1)));
  for (int n = 0; n <= 10; ++n) CHECK(A1().weyl_dim(Weight(n)) == n + 1);
  CHECK(A2().weyl_dim(A2().rho()) == 8);
  CHECK(A2().weyl_dim(Weight(1, 0)) == 3);
  CHECK_THROWS(A2().weyl_dim(Weight(1, -1)));
  const auto& w0 = A2().longest_element();
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      Weight lam(a, b);
      CHECK(A2().weyl_dim(lam) == A2().weyl_dim(-A2().weyl_act(w0, lam)));
    }
}

TEST_CASE("Kostant partition function", "[root_datum]") {
  CHECK(A1().kostant_partition(Weight()) == 1);
  for (int k = 0; k <= 6; ++k) CHECK(A1().kostant_partition(Weight(2 * k)) == 1);
  CHECK(A2().kostant_partition(A2().from_root_coordinates(1, 1)) == 2);
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b) {
      Weight beta = A2().from_root_coordinates(a, b);
      CHECK(A2().kostant_partition(beta) == brute_partitions(A2(), beta));
    }
  for (int a = -3; a <= 10; ++a) CHECK(A1().kostant_partition(Weight(a)) == brute_partitions(A1(), Weight(a)));
}

TEST_CASE("Freudenthal character", "[root_datum]") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      long total = 0;
      for (const auto& [w, m] : A2().character(Weight(a, b))) total += m;
      CHECK(total == A2().weyl_dim(Weight(a, b)));
    }
  auto adj = A2().character(A2().rho());
  long zero_mult = 0;
  for (const auto& [w, m] : adj)
    if (w.is_zero()) zero_mult = m;
  CHECK(zero_mult == 2);
}
