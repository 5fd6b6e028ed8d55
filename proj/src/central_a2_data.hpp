#pragma once

#include <array>
#include <vector>

namespace qflag::detail {

struct CentralTerm {
  std::array<int, 3> f;
  std::array<int, 2> k;
  std::array<int, 3> e;
  const char* coeff;
};

const std::vector<std::vector<CentralTerm>>& central_a2_terms();

}  // namespace qflag::detail
