#pragma once

#include <functional>
#include <string>

#include "qflag/lincomb.hpp"

namespace qflag::detail {

// "[coef]*key + ..." with unit coefficients and unit keys elided
template <class Key>
std::string lincomb_string(const LinComb<Key>& x, const std::function<std::string(const Key&)>& key_str) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x) {
    if (!s.empty()) s += " + ";
    std::string ks = key_str(k);
    if (c.is_one())
      s += ks;
    else if (ks == "1")
      s += "[" + c.to_string() + "]";
    else
      s += "[" + c.to_string() + "]*" + ks;
  }
  return s;
}

}  // namespace qflag::detail
