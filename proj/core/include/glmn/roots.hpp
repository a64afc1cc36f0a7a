#pragma once

// Positive roots of Borel subgroups of GL(M|N) and the excess-root set
// between the standard and the mixed Borel.
//
// Indices are 1-based throughout: basis vector v_k for k in 1..M+N, even for
// k <= M and odd for k > M.

#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "glmn/weight.hpp"

namespace glmn {

/// A flag v_{w(1)} ⊂ ... ⊂ v_{w(M+N)}, stored as the permutation w.
class BorelWord {
 public:
  /// Throws ValidationError unless `word` is a permutation of 1..M+N.
  BorelWord(std::vector<int> word, const SuperRank& rank);

  static BorelWord standard(const SuperRank& rank);

  [[nodiscard]] const std::vector<int>& word() const noexcept { return word_; }

  friend bool operator==(const BorelWord&, const BorelWord&) = default;

 private:
  std::vector<int> word_;
};

/// The root eps_a - eps_b.
struct Root {
  int a;
  int b;

  friend auto operator<=>(const Root&, const Root&) = default;
};

/// The root eps_i - eps_{M+j}, 1 <= j <= i <= M.
struct PairIndex {
  int i;
  int j;

  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

[[nodiscard]] std::set<Root> positive_roots(const BorelWord& omega, const SuperRank& rank);

/// (M+1, 1, M+2, 2, ..., 2M, M, 2M+1, ..., M+N).
[[nodiscard]] BorelWord mixed_word(const SuperRank& rank);

/// Roots positive for the standard Borel but not the mixed one, as pairs
/// sorted by (i, j). Computed as a set difference; throws InternalError if
/// any surviving root is not eps_i - eps_{M+j} with j <= i.
[[nodiscard]] std::vector<PairIndex> excess_pairs(const SuperRank& rank);

/// (i1, j1) <= (i2, j2) iff i1 >= i2 and j1 <= j2.
[[nodiscard]] constexpr bool pair_leq(PairIndex x, PairIndex y) noexcept {
  return x.i >= y.i && x.j <= y.j;
}

/// Covering relations (x, y) of pair_leq on { (i, j) : 1 <= j <= i <= m }.
[[nodiscard]] std::vector<std::pair<PairIndex, PairIndex>> pair_covers(int m);

}  // namespace glmn
