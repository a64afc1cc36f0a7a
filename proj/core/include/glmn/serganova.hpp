#pragma once

// Serganova's algorithm from the standard to the mixed Borel of GL(M|N).
//
// Each step visits one excess pair (i, j). If lambda_i + theta_j vanishes
// (exactly, or mod p) nothing happens; otherwise one unit moves from
// lambda_i to theta_j. The visited sum is unchanged by either action, so the
// inverse replays the steps backwards with the same test.

#include <cstddef>
#include <string_view>
#include <vector>

#include "glmn/roots.hpp"
#include "glmn/weight.hpp"

namespace glmn {

/// A linear extension of pair_leq on the excess pairs of rank M.
class StepOrder {
 public:
  /// Throws ValidationError unless `steps` is a permutation of the excess
  /// pairs for `m` in which every x strictly below y comes first.
  StepOrder(std::vector<PairIndex> steps, int m);

  [[nodiscard]] const std::vector<PairIndex>& steps() const noexcept { return steps_; }
  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] std::size_t size() const noexcept { return steps_.size(); }

  friend bool operator==(const StepOrder&, const StepOrder&) = default;

 private:
  std::vector<PairIndex> steps_;
  int m_;
};

/// (M,1) < (M-1,1) < ... < (1,1) < (M,2) < ... < (M,M): j outer, i descending.
[[nodiscard]] StepOrder order_v1(int m);

/// (M,1) < (M,2) < ... < (M,M) < (M-1,1) < ... < (1,1): i descending outer.
[[nodiscard]] StepOrder order_v2(int m);

/// Every linear extension, in lexicographic order. Throws CapacityError once
/// more than `cap` extensions exist.
[[nodiscard]] std::vector<StepOrder> all_linear_extensions(int m, std::size_t cap);

enum class Action { NoOp, Move };
enum class Direction { Forward, Inverse };

[[nodiscard]] std::string_view to_string(Action a) noexcept;
[[nodiscard]] std::string_view to_string(Direction d) noexcept;

struct StepRecord {
  int k;  // 1-based
  PairIndex pair;
  Action action;
  Coord sum_before;  // lambda_i + theta_j before the step
  Weight state_after;
};

struct Trace {
  Direction direction;
  StepOrder order_used;
  std::vector<StepRecord> records;
};

struct RunResult {
  Weight weight;
  Trace trace;
};

/// Runs the algorithm on any integral weight; dominance is not required.
/// Only theta_1..theta_M are ever touched.
[[nodiscard]] RunResult forward(const Weight& w, Modulus p, const StepOrder& order,
                                const SuperRank& rank);

[[nodiscard]] RunResult inverse(const Weight& w, Modulus p, const StepOrder& order,
                                const SuperRank& rank);

}  // namespace glmn
