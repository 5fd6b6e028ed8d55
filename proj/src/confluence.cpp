#include "qflag/confluence.hpp"

#include <map>

namespace qflag {

namespace {

class RandomRewriter {
 public:
  RandomRewriter(const UqAlgebra& U, uint32_t seed) : U_(U), rng_(seed) {}

  UqElement normal_form(const Word& w) {
    std::map<Word, QScalar> todo{{w, QScalar(1)}};
    UqElement done;
    while (!todo.empty()) {
      auto it = todo.begin();
      std::advance(it, std::uniform_int_distribution<size_t>(0, todo.size() - 1)(rng_));
      Word word = it->first;
      QScalar c = it->second;
      todo.erase(it);
      std::vector<size_t> redexes = find_redexes(word);
      if (redexes.empty()) {
        done.add(to_monomial(word), c);
        continue;
      }
      size_t p = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng_)];
      for (const auto& [d, rep] : rewrite(word, p)) {
        Word nw(word.begin(), word.begin() + p);
        nw.insert(nw.end(), rep.begin(), rep.end());
        size_t consumed = (word[p].kind == Generator::Kind::K && word[p].mu.is_zero()) ? 1 : 2;
        nw.insert(nw.end(), word.begin() + p + consumed, word.end());
        QScalar x = c * d;
        auto [jt, ins] = todo.try_emplace(nw, x);
        if (!ins) {
          jt->second += x;
          if (jt->second.is_zero()) todo.erase(jt);
        }
      }
    }
    return done;
  }

 private:
  static int rank_of(const Generator& g) {
    return g.kind == Generator::Kind::F ? 0 : g.kind == Generator::Kind::K ? 1 : 2;
  }

  std::vector<size_t> find_redexes(const Word& w) {
    std::vector<size_t> out;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i].kind == Generator::Kind::K && w[i].mu.is_zero()) {
        out.push_back(i);
        continue;
      }
      if (i + 1 == w.size()) continue;
      const auto &a = w[i], &b = w[i + 1];
      int ra = rank_of(a), rb = rank_of(b);
      if (ra > rb || (ra == 1 && rb == 1) || (ra == rb && ra != 1 && a.root > b.root)) out.push_back(i);
    }
    return out;
  }

  Word ordered_word(bool e, const RootExps& m) {
    Word w;
    for (int r = 0; r < U_.datum().num_positive_roots(); ++r)
      for (int k = 0; k < m[r]; ++k) w.push_back(e ? Generator::E(r) : Generator::F(r));
    return w;
  }

  std::vector<std::pair<QScalar, Word>> rewrite(const Word& w, size_t p) {
    const RootDatum& rd = U_.datum();
    const QField& f = U_.field();
    const Generator& a = w[p];
    if (a.kind == Generator::Kind::K && a.mu.is_zero()) return {{QScalar(1), {}}};
    const Generator& b = w[p + 1];
    using K = Generator::Kind;
    if (a.kind == K::K && b.kind == K::K) return {{QScalar(1), {Generator::K(a.mu + b.mu)}}};
    if (a.kind == K::K && b.kind == K::F)
      return {{f.q_pow(-rd.pairing(a.mu, rd.positive_roots()[b.root])), {b, a}}};
    if (a.kind == K::E && b.kind == K::K)
      return {{f.q_pow(-rd.pairing(b.mu, rd.positive_roots()[a.root])), {b, a}}};
    if (a.kind == K::E && b.kind == K::F) {
      std::vector<std::pair<QScalar, Word>> out{{QScalar(1), {b, a}}};
      for (const auto& [m, c] : U_.root_commutator(a.root, b.root)) out.push_back({c, U_.monomial_word(m)});
      return out;
    }
    // same kind, out of order
    std::vector<std::pair<QScalar, Word>> out;
    for (const auto& [c, m] : U_.ordered_swap(a.root, b.root)) out.push_back({c, ordered_word(a.kind == K::E, m)});
    return out;
  }

  PbwMonomial to_monomial(const Word& w) {
    PbwMonomial m;
    for (const auto& g : w) {
      if (g.kind == Generator::Kind::F) ++m.f[g.root];
      if (g.kind == Generator::Kind::E) ++m.e[g.root];
      if (g.kind == Generator::Kind::K) m.k = m.k + g.mu;
    }
    return m;
  }

  const UqAlgebra& U_;
  std::mt19937 rng_;
};

}  // namespace

Word random_word(const UqAlgebra& U, std::mt19937& rng, int max_len) {
  int nr = U.datum().num_positive_roots();
  std::uniform_int_distribution<int> len(0, max_len), kind(0, 2), root(0, nr - 1), co(-2, 2);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int k = kind(rng);
    if (k == 0) w.push_back(Generator::E(root(rng)));
    if (k == 1) w.push_back(Generator::F(root(rng)));
    if (k == 2) w.push_back(Generator::K(Weight(co(rng), U.datum().rank() > 1 ? co(rng) : 0)));
  }
  return w;
}


UqElement random_order_normal_form(const UqAlgebra& U, const Word& w, uint32_t seed) {
  return RandomRewriter(U, seed).normal_form(w);
}

}  // namespace qflag
