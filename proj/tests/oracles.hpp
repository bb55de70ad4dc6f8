#ifndef TWISTFORGE_TESTS_ORACLES_HPP
#define TWISTFORGE_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include "twistforge/uea.hpp"

namespace oracle {

using namespace twistforge;

using Word = std::vector<int>;
using WordSum = std::map<Word, GaussianRational>;

// Rewrites the leftmost inversion of every word until all words are sorted;
// no caching and no use of PbwKernel.
inline WordSum free_reduce(const LieAlgebra& a, WordSum in) {
  WordSum done;
  while (!in.empty()) {
    auto node = in.extract(in.begin());
    const Word& w = node.key();
    GaussianRational c = node.mapped();
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      done[w] += c;
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    in[swapped] += c;
    for (const auto& [g, k] : a.bracket(w[i], w[i + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(i));
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      in[shorter] += c * k;
    }
  }
  for (auto it = done.begin(); it != done.end();) it = it->second.is_zero() ? done.erase(it) : std::next(it);
  return done;
}

inline UElement from_words(const AlgebraPtr& a, const WordSum& s) {
  UElement u(a, 1);
  for (const auto& [w, c] : s) {
    Monomial m{};
    for (int g : w) ++m[static_cast<std::size_t>(g)];
    u += UElement::monomial(a, m, c);
  }
  return u;
}

inline Word word_of(const Monomial& m) {
  Word w;
  for (std::size_t g = 0; g < m.size(); ++g)
    for (int k = 0; k < m[g]; ++k) w.push_back(static_cast<int>(g));
  return w;
}

inline void all_words(int letters, int max_len, Word& cur, std::vector<Word>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int g = 0; g < letters; ++g) {
    cur.push_back(g);
    all_words(letters, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace oracle

#endif  // TWISTFORGE_TESTS_ORACLES_HPP
