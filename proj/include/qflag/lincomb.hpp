#pragma once

#include <map>
#include <utility>

#include "qflag/scalars.hpp"

namespace qflag {

// Finite linear combination of basis keys with QScalar coefficients.
// Zero coefficients are never stored, so equality is map equality.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, QScalar>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, QScalar c = QScalar(1)) { add(k, c); }

  void add(const Key& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const LinComb& o, const QScalar& c = QScalar(1)) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add(k, c.is_one() ? v : v * c);
  }

  QScalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QScalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, QScalar(-1));
    return *this;
  }
  LinComb operator+(const LinComb& o) const {
    LinComb r = *this;
    r += o;
    return r;
  }
  LinComb operator-(const LinComb& o) const {
    LinComb r = *this;
    r -= o;
    return r;
  }
  LinComb operator-() const { return scaled(QScalar(-1)); }
  LinComb scaled(const QScalar& c) const {
    LinComb r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, v * c);
    return r;
  }
  bool operator==(const LinComb&) const = default;

  template <class F>
  auto map_keys(F f) const {
    LinComb<decltype(f(std::declval<Key>()))> r;
    for (const auto& [k, v] : terms_) r.add(f(k), v);
    return r;
  }

 private:
  Map terms_;
};

}  // namespace qflag
