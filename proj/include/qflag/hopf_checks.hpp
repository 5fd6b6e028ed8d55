#pragma once

#include <random>

#include "qflag/uq_algebra.hpp"

namespace qflag {

// (eps x id) Delta and (id x eps) Delta
UqElement hopf_counit_left(const UqAlgebra& U, const UqTensor& dx);
UqElement hopf_counit_right(const UqAlgebra& U, const UqTensor& dx);
// m (S x id) Delta and m (id x S) Delta
UqElement hopf_antipode_left(const UqAlgebra& U, const UqTensor& dx);
UqElement hopf_antipode_right(const UqAlgebra& U, const UqTensor& dx);
// (Delta x id) Delta and (id x Delta) Delta
UqTensorN<3> coassoc_left(const UqAlgebra& U, const UqTensor& dx);
UqTensorN<3> coassoc_right(const UqAlgebra& U, const UqTensor& dx);

// Random element: one to three PBW monomials with at most max_letters E/F
// letters in total, small K-part and coefficients in {+-1, +-2, +-q^k}.
UqElement random_element(const UqAlgebra& U, std::mt19937& rng, int max_letters);

}  // namespace qflag
