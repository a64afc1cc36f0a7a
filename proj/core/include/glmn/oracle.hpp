#pragma once

// Exhaustive verification over integer boxes.
//
// Each check walks every weight whose coordinates lie in [lo, hi] and reports
// the weights that violate it. Checks run through an Algorithms bundle so the
// test suite can substitute deliberately broken implementations and confirm
// that a check is able to fail.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "glmn/classify.hpp"
#include "glmn/serganova.hpp"
#include "glmn/weight.hpp"

namespace glmn {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;
inline constexpr std::size_t kDefaultFailureCap = 20;
inline constexpr std::size_t kDefaultExtensionCap = 100'000;

/// Every coordinate ranges over [lo, hi].
struct Box {
  Coord lo;
  Coord hi;

  Box(Coord lo_, Coord hi_);

  /// (hi - lo + 1)^dims, saturating at UINT64_MAX.
  [[nodiscard]] std::uint64_t cardinality(int dims) const noexcept;
};

using WeightFilter = std::function<bool(const Weight&)>;
using WeightSink = std::function<void(const Weight&)>;

/// Calls `sink` on every weight of the box that passes `filter` (all weights
/// when `filter` is empty), in lexicographic order of (lambda, theta).
/// Returns the number of weights passed to `sink`. Throws CapacityError if the
/// box holds more than `limit` weights.
std::uint64_t enumerate_box(const SuperRank& rank, const Box& box, const WeightFilter& filter,
                            const WeightSink& sink,
                            std::uint64_t limit = kDefaultEnumerationLimit);

struct Failure {
  Weight weight;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string check_name;
  std::uint64_t total = 0;         // instances examined
  std::uint64_t failure_count = 0; // uncapped
  std::vector<Failure> failures;   // sorted, at most failure_cap entries
  bool passed = true;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Implementations under test. Defaults are the library's own.
struct Algorithms {
  using Transform = std::function<RunResult(const Weight&, Modulus, const StepOrder&,
                                            const SuperRank&)>;
  using Membership = std::function<bool(const Weight&, const SuperRank&)>;
  using ModMembership = std::function<bool(const Weight&, const SuperRank&, Modulus)>;

  Transform forward = glmn::forward;
  Transform inverse = glmn::inverse;
  Membership standard_dominant = glmn::is_standard_dominant;
  ModMembership mixed_highest_weight = glmn::is_mixed_highest_weight;
  /// Orbit-side predicate compared against the algorithm in verify_theorem.
  ModMembership relevant = [](const Weight& w, const SuperRank& rank, Modulus p) {
    return glmn::is_relevant_orbit(w, rank, p, GroupConvention::UPlus);
  };
};

struct VerifyOptions {
  std::size_t failure_cap = kDefaultFailureCap;
  std::uint64_t limit = kDefaultEnumerationLimit;
  std::size_t extension_cap = kDefaultExtensionCap;
  /// Worker threads; the box is split by its first coordinate. The report is
  /// identical for every value.
  unsigned threads = 1;
};

/// S maps A into the mixed set and inverts there; S^{-1} maps the mixed set
/// back into A. Both directions are checked on the box.
[[nodiscard]] VerificationReport verify_image(const SuperRank& rank, Modulus p, const Box& box,
                                              const VerifyOptions& opts = {},
                                              const Algorithms& algos = {});

/// On A ∩ box, every linear extension gives the same result as order_v1.
[[nodiscard]] VerificationReport verify_order_invariance(const SuperRank& rank, Modulus p,
                                                         const Box& box,
                                                         const VerifyOptions& opts = {},
                                                         const Algorithms& algos = {});

/// Orbit relevance (UPlus) coincides with membership in S(A), decided by
/// running the inverse and then the forward algorithm. Requires prime p.
[[nodiscard]] VerificationReport verify_theorem(const SuperRank& rank, Modulus p,
                                                const Box& box, const VerifyOptions& opts = {},
                                                const Algorithms& algos = {});

/// Per-step invariants of forward runs on A ∩ box: lambda stays
/// non-increasing under order_v1, theta_1..theta_{M+1} under order_v2, the
/// coordinate sum and the visited residue are preserved, and the entries
/// theta_{M+2}..theta_N never change.
[[nodiscard]] VerificationReport verify_trace_invariants(const SuperRank& rank, Modulus p,
                                                         const Box& box,
                                                         const VerifyOptions& opts = {},
                                                         const Algorithms& algos = {});

/// Violations of the trace invariants in a single forward trace; empty when
/// the trace is sound. Exposed for inspection of individual runs.
[[nodiscard]] std::vector<std::string> trace_violations(const Weight& start, const Trace& trace,
                                                        Modulus p, const SuperRank& rank);

}  // namespace glmn
