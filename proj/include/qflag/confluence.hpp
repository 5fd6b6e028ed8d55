#pragma once

#include <cstdint>
#include <random>

#include "qflag/uq_algebra.hpp"

namespace qflag {

// Normal form by a word rewriter that applies one rule at a randomly chosen
// redex. It shares the rule data with the engine but none of its control flow.
UqElement random_order_normal_form(const UqAlgebra& U, const Word& w, uint32_t seed);

// random word in E, F (all root vectors) and small K's, length <= max_len
Word random_word(const UqAlgebra& U, std::mt19937& rng, int max_len);

}  // namespace qflag
