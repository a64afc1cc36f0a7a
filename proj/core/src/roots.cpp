#include "glmn/roots.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace glmn {

BorelWord::BorelWord(std::vector<int> word, const SuperRank& rank) : word_(std::move(word)) {
  const auto size = static_cast<std::size_t>(rank.total());
  if (word_.size() != size) {
    throw ValidationError("Borel word has length " + std::to_string(word_.size()) +
                          ", expected " + std::to_string(size));
  }
  std::vector<bool> seen(size + 1, false);
  for (int v : word_) {
    if (v < 1 || v > rank.total() || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("Borel word is not a permutation of 1.." +
                            std::to_string(rank.total()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

BorelWord BorelWord::standard(const SuperRank& rank) {
  std::vector<int> word(static_cast<std::size_t>(rank.total()));
  std::iota(word.begin(), word.end(), 1);
  return BorelWord{std::move(word), rank};
}

std::set<Root> positive_roots(const BorelWord& omega, const SuperRank& rank) {
  const auto& w = omega.word();
  if (w.size() != static_cast<std::size_t>(rank.total())) {
    throw ValidationError("Borel word does not match rank");
  }
  std::set<Root> roots;
  for (std::size_t s = 0; s < w.size(); ++s) {
    for (std::size_t t = s + 1; t < w.size(); ++t) roots.insert(Root{w[s], w[t]});
  }
  return roots;
}

BorelWord mixed_word(const SuperRank& rank) {
  const int m = rank.m();
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(rank.total()));
  for (int k = 1; k <= m; ++k) {
    word.push_back(m + k);
    word.push_back(k);
  }
  for (int k = 2 * m + 1; k <= rank.total(); ++k) word.push_back(k);
  return BorelWord{std::move(word), rank};
}

std::vector<PairIndex> excess_pairs(const SuperRank& rank) {
  const auto standard = positive_roots(BorelWord::standard(rank), rank);
  const auto mixed = positive_roots(mixed_word(rank), rank);

  std::vector<Root> diff;
  std::set_difference(standard.begin(), standard.end(), mixed.begin(), mixed.end(),
                      std::back_inserter(diff));

  const int m = rank.m();
  std::vector<PairIndex> pairs;
  pairs.reserve(diff.size());
  for (const Root& r : diff) {
    const bool even_odd = r.a <= m && r.b > m;
    const PairIndex pi{r.a, r.b - m};
    if (!even_odd || pi.j < 1 || pi.j > pi.i) {
      throw InternalError("excess root eps_" + std::to_string(r.a) + " - eps_" +
                          std::to_string(r.b) + " is not of the form eps_i - eps_{M+j}, j <= i");
    }
    pairs.push_back(pi);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<std::pair<PairIndex, PairIndex>> pair_covers(int m) {
  std::vector<PairIndex> elems;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= i; ++j) elems.push_back({i, j});
  }
  std::vector<std::pair<PairIndex, PairIndex>> covers;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (x == y || !pair_leq(x, y)) continue;
      const bool has_between = std::any_of(elems.begin(), elems.end(), [&](const PairIndex& z) {
        return z != x && z != y && pair_leq(x, z) && pair_leq(z, y);
      });
      if (!has_between) covers.emplace_back(x, y);
    }
  }
  return covers;
}

}  // namespace glmn
