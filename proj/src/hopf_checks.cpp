#include "qflag/hopf_checks.hpp"

namespace qflag {

UqElement hopf_counit_left(const UqAlgebra& U, const UqTensor& dx) {
  UqElement out;
  for (const auto& [k, c] : dx) out.add(UqElement(k[1]), c * U.counit(UqElement(k[0])));
  return out;
}

UqElement hopf_counit_right(const UqAlgebra& U, const UqTensor& dx) {
  UqElement out;
  for (const auto& [k, c] : dx) out.add(UqElement(k[0]), c * U.counit(UqElement(k[1])));
  return out;
}

UqElement hopf_antipode_left(const UqAlgebra& U, const UqTensor& dx) {
  UqElement out;
  for (const auto& [k, c] : dx) out.add(U.multiply(U.antipode(UqElement(k[0])), UqElement(k[1])), c);
  return out;
}

UqElement hopf_antipode_right(const UqAlgebra& U, const UqTensor& dx) {
  UqElement out;
  for (const auto& [k, c] : dx) out.add(U.multiply(UqElement(k[0]), U.antipode(UqElement(k[1]))), c);
  return out;
}

UqTensorN<3> coassoc_left(const UqAlgebra& U, const UqTensor& dx) {
  UqTensorN<3> out;
  for (const auto& [k, c] : dx)
    for (const auto& [k2, c2] : U.coproduct(UqElement(k[0]))) out.add({k2[0], k2[1], k[1]}, c * c2);
  return out;
}

UqTensorN<3> coassoc_right(const UqAlgebra& U, const UqTensor& dx) {
  UqTensorN<3> out;
  for (const auto& [k, c] : dx)
    for (const auto& [k2, c2] : U.coproduct(UqElement(k[1]))) out.add({k[0], k2[0], k2[1]}, c * c2);
  return out;
}

UqElement random_element(const UqAlgebra& U, std::mt19937& rng, int max_letters) {
  const RootDatum& rd = U.datum();
  int nr = rd.num_positive_roots();
  std::uniform_int_distribution<int> nterms(1, 3), letters(0, max_letters), root(0, nr - 1), side(0, 1),
      kco(-1, 1), coeff(0, 5), qexp(-2, 2);
  UqElement x;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    PbwMonomial m;
    int len = letters(rng);
    for (int i = 0; i < len; ++i) {
      int r = root(rng);
      if (side(rng))
        ++m.e[r];
      else
        ++m.f[r];
    }
    for (int i = 0; i < rd.rank(); ++i) m.k[i] = kco(rng);
    QScalar c;
    switch (coeff(rng)) {
      case 0: c = 1; break;
      case 1: c = -1; break;
      case 2: c = 2; break;
      case 3: c = -2; break;
      default: c = U.field().q_pow(qexp(rng)); break;
    }
    x.add(m, c);
  }
  if (x.is_zero()) return U.one();
  return x;
}

}  // namespace qflag
