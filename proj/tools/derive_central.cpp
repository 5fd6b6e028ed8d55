// Finds central elements of U_q(sl3) by solving [x, E_i] = [x, F_i] = 0 over
// an ansatz of weight-zero PBW monomials, and prints them as a C++ data table.
//
//   derive_central [box] > src/central_a2_data.cpp

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>

#include "qflag/linalg.hpp"
#include "qflag/uq_algebra.hpp"

using namespace qflag;

namespace {

std::vector<std::pair<RootExps, RootExps>> weight_zero_pairs() {
  // F-part and E-part of equal weight, root heights at most 2
  std::vector<RootExps> parts = {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {2, 0, 0}, {0, 0, 2}, {1, 0, 1}, {0, 1, 0}};
  const UqAlgebra& U = UqAlgebra::get(CartanType::A2);
  std::vector<std::pair<RootExps, RootExps>> out;
  for (const auto& f : parts)
    for (const auto& e : parts)
      if (U.weight(PbwMonomial{f, {}, {}}) == -U.weight(PbwMonomial{{}, {}, e})) out.push_back({f, e});
  return out;
}

std::vector<UqElement> solve_coset(const UqAlgebra& U, int residue, int box) {
  std::vector<PbwMonomial> unknowns;
  for (const auto& [f, e] : weight_zero_pairs())
    for (int a = -box; a <= box; ++a)
      for (int b = -box; b <= box; ++b)
        if ((((a - b) % 3) + 3) % 3 == residue) unknowns.push_back(PbwMonomial{f, Weight(a, b), e});
  std::vector<UqElement> gens = {U.E(0), U.E(1), U.F(0), U.F(1)};
  std::map<std::pair<int, PbwMonomial>, size_t> rows;
  std::vector<std::vector<std::pair<size_t, QScalar>>> cols(unknowns.size());
  for (size_t j = 0; j < unknowns.size(); ++j) {
    UqElement x(unknowns[j]);
    for (int g = 0; g < 4; ++g)
      for (const auto& [m, c] : U.commutator(gens[g], x)) {
        auto [it, ins] = rows.try_emplace({g, m}, rows.size());
        cols[j].push_back({it->second, c});
      }
  }
  Matrix mat(rows.size(), unknowns.size());
  for (size_t j = 0; j < unknowns.size(); ++j)
    for (const auto& [r, c] : cols[j]) mat.at(r, j) += c;
  std::fprintf(stderr, "residue %d: %zu unknowns, %zu equations\n", residue, unknowns.size(), rows.size());
  std::vector<UqElement> out;
  for (const auto& v : kernel(mat)) {
    UqElement z;
    for (size_t j = 0; j < v.size(); ++j) z.add(unknowns[j], v[j]);
    out.push_back(z);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int box = argc > 1 ? std::atoi(argv[1]) : 3;
  const UqAlgebra& U = UqAlgebra::get(CartanType::A2);
  std::cout << "// Generated by tools/derive_central.cpp; do not edit.\n"
               "// Central elements of U_q(sl3): kernel of [E_i, -], [F_i, -] on the ansatz.\n\n"
               "#include \"central_a2_data.hpp\"\n\nnamespace qflag::detail {\n\n"
               "const std::vector<std::vector<CentralTerm>>& central_a2_terms() {\n"
               "  static const std::vector<std::vector<CentralTerm>> data = {\n";
  for (int residue : {2, 1}) {  // cosets of 2 omega_1 and 2 omega_2
    auto sols = solve_coset(U, residue, box);
    std::fprintf(stderr, "  kernel dimension %zu\n", sols.size());
    if (sols.empty()) return 1;
    const UqElement& z = sols.front();
    // normalize so that the K-only term of largest omega_1 coordinate has coefficient 1
    QScalar lead;
    for (const auto& [m, c] : z)
      if (m.f == RootExps{} && m.e == RootExps{}) lead = c;
    UqElement zn = z.scaled(lead.inverse());
    std::cout << "      {\n";
    for (const auto& [m, c] : zn)
      std::cout << "          {{" << int(m.f[0]) << ", " << int(m.f[1]) << ", " << int(m.f[2]) << "}, {" << m.k[0]
                << ", " << m.k[1] << "}, {" << int(m.e[0]) << ", " << int(m.e[1]) << ", " << int(m.e[2]) << "}, \""
                << c.to_string() << "\"},\n";
    std::cout << "      },\n";
  }
  std::cout << "  };\n  return data;\n}\n\n}  // namespace qflag::detail\n";
  return 0;
}
