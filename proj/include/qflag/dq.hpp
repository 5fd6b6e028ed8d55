#pragma once

#include <random>
#include <string>
#include <utility>

#include "qflag/oq.hpp"
#include "qflag/weight_modules.hpp"

namespace qflag {

// Smash product D_q = O_q # U_q for A1, stored as sums of x (x) u with the
// O_q factor on the left: (x (x) u)(y (x) w) = x u_1(y) (x) u_2 w.
using DqKey = std::pair<OqMono, PbwMonomial>;
using DqElement = LinComb<DqKey>;

DqElement dq_pure(const OqElement& x, const UqElement& u);
DqElement dq_multiply(const DqElement& x, const DqElement& y);
// two terms, O_q degree <= 2, E/F exponents <= 2, |K| <= 1, coefficients in {+-1, +-2, q}
DqElement random_dq_element(std::mt19937& rng);

// degree of the U_q leg; throws on 0
int dq_filtration_degree(const DqElement& x);

// u.(x (x) w) = u_1(x) (x) ad(u_2)(w) for u in U_q(b); throws if u has an F-part
DqElement dq_equivariant_act(const UqElement& u, const DqElement& x);

// Class in D_q^lambda = O_q (x) M_lambda: coefficients on x (x) F^a 1_lambda.
using DlambdaKey = std::pair<OqMono, RootExps>;
using DlambdaClass = LinComb<DlambdaKey>;
DlambdaClass dlambda_reduce(const DqElement& x, const WeightCharacter& lambda);

// gr_j of the F-degree filtration of M_lambda, twisted by k_{-lambda}: the
// torus weights (omega-coordinates) of its basis, on which E acts by 0
std::vector<Weight> graded_verma_weights(const UqAlgebra& U, const WeightCharacter& lambda, int j);
// dim Gamma(p*(gr_j M_lambda)). A1: windowed invariants; A2: Borel-Weil from character data.
long gamma_dlambda_graded_dim(const UqAlgebra& U, const WeightCharacter& lambda, int j);

std::string to_string(const DqElement& x);
std::string to_string(const DlambdaClass& x);
// atoms: a, b, c, d (as x (x) 1), E, F, K(n) (as 1 (x) u), q, v, integers, [scalar]
DqElement dq_parse(const std::string& expr);

}  // namespace qflag
