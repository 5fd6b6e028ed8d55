// Generated by tools/derive_central.cpp; do not edit.
// Central elements of U_q(sl3): kernel of [E_i, -], [F_i, -] on the ansatz.

#include "central_a2_data.hpp"

namespace qflag::detail {

const std::vector<std::vector<CentralTerm>>& central_a2_terms() {
  static const std::vector<std::vector<CentralTerm>> data = {
      {
          {{0, 0, 0}, {-2, 2}, {0, 0, 0}, "v^-12"},
          {{0, 0, 0}, {0, -2}, {0, 0, 0}, "v^-24"},
          {{0, 0, 0}, {2, 0}, {0, 0, 0}, "1"},
          {{0, 0, 1}, {-1, 0}, {0, 0, 1}, "v^-6-2*v^-18+v^-30"},
          {{0, 1, 0}, {1, -1}, {0, 1, 0}, "-v^12+2-v^-12"},
          {{1, 0, 0}, {0, 1}, {1, 0, 0}, "v^6-2*v^-6+v^-18"},
          {{1, 0, 1}, {1, -1}, {0, 1, 0}, "v^12-3+3*v^-12-v^-24"},
      },
      {
          {{0, 0, 0}, {-2, 0}, {0, 0, 0}, "v^-12"},
          {{0, 0, 0}, {0, 2}, {0, 0, 0}, "v^12"},
          {{0, 0, 0}, {2, -2}, {0, 0, 0}, "1"},
          {{0, 0, 1}, {1, 0}, {0, 0, 1}, "v^18-2*v^6+v^-6"},
          {{0, 1, 0}, {-1, 1}, {0, 1, 0}, "-v^24+2*v^12-1"},
          {{0, 1, 0}, {-1, 1}, {1, 0, 1}, "v^24-3*v^12+3-v^-12"},
          {{1, 0, 0}, {0, -1}, {1, 0, 0}, "v^6-2*v^-6+v^-18"},
      },
  };
  return data;
}

}  // namespace qflag::detail
