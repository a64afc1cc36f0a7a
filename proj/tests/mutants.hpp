#pragma once

// Deliberately broken variants of library routines. A verification check
// that cannot tell these apart from the real implementation is vacuous.

#include <span>

#include "glmn/classify.hpp"
#include "glmn/oracle.hpp"
#include "glmn/serganova.hpp"

namespace glmn::testing {

/// Forward run with the congruence test inverted: moves exactly when the
/// visited sum vanishes.
inline RunResult forward_inverted_test(const Weight& w, Modulus p, const StepOrder& order,
                                       const SuperRank& rank) {
  check_matches(w, rank);
  RunResult result{w, Trace{Direction::Forward, order, {}}};
  Weight& s = result.weight;
  int k = 0;
  for (const PairIndex& pair : order.steps()) {
    Coord& lam = s.lambda[static_cast<std::size_t>(pair.i - 1)];
    Coord& th = s.theta[static_cast<std::size_t>(pair.j - 1)];
    const Coord sum = lam + th;
    const bool move = congruent_zero(sum, p);
    if (move) {
      --lam;
      ++th;
    }
    result.trace.records.push_back(
        StepRecord{++k, pair, move ? Action::Move : Action::NoOp, sum, s});
  }
  return result;
}

/// UPlus relevance with condition B checked one index too far: theta-equality
/// for i = 2..M+1 and lambda-equality for i = 3..M+1 (diagonal sums taken at
/// the shifted index, clamped to the last lambda).
inline bool relevant_shifted_b_range(const Weight& w, const SuperRank& rank, Modulus p) {
  if (!is_standard_dominant(w, rank)) return false;
  const auto m = static_cast<std::size_t>(rank.m());
  auto diag = [&](std::size_t i) {
    const std::size_t li = std::min(i, m);
    return congruent_zero(w.lambda[li - 1] + w.theta[i - 1], p);
  };
  for (std::size_t i = 2; i <= m + 1 && i < w.theta.size(); ++i) {
    if (w.theta[i - 1] == w.theta[i] && !diag(i)) return false;
  }
  for (std::size_t i = 3; i <= m + 1 && i <= m; ++i) {
    if (w.lambda[i - 2] == w.lambda[i - 1] && !diag(i)) return false;
  }
  return true;
}

/// Relevance with every chain inequality reversed (the UMinus convention
/// used where UPlus is meant).
inline bool relevant_swapped_inequalities(const Weight& w, const SuperRank& rank, Modulus p) {
  return is_relevant_orbit(w, rank, p, GroupConvention::UMinus);
}

inline Algorithms with_inverted_congruence() {
  Algorithms a;
  a.forward = forward_inverted_test;
  return a;
}

inline Algorithms with_shifted_b_range() {
  Algorithms a;
  a.relevant = relevant_shifted_b_range;
  return a;
}

inline Algorithms with_swapped_inequalities() {
  Algorithms a;
  a.relevant = relevant_swapped_inequalities;
  return a;
}

}  // namespace glmn::testing
