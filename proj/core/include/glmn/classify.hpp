#pragma once

// Membership predicates for the weight sets attached to GL(M|N):
//   - standard-dominant weights,
//   - highest weights with respect to the mixed Borel (chains plus condition B),
//   - relevant orbits on the affine Grassmannian under either unipotent
//     convention,
// and the monomial matrix labelling each orbit.

#include <map>
#include <string_view>
#include <utility>

#include "glmn/weight.hpp"

namespace glmn {

/// UMinus: lower-triangular unipotent, chains non-decreasing.
/// UPlus: its transpose, every chain inequality reversed (non-increasing).
enum class GroupConvention { UMinus, UPlus };

[[nodiscard]] std::string_view to_string(GroupConvention g) noexcept;

/// lambda_1 >= ... >= lambda_M and theta_1 >= ... >= theta_N.
[[nodiscard]] bool is_standard_dominant(const Weight& w, const SuperRank& rank);

/// Standard-dominant, and for adjacent equal entries the diagonal sum
/// lambda_i + theta_i vanishes mod p:
///   theta_i == theta_{i+1}   for i = 1..M,
///   lambda_{i-1} == lambda_i for i = 2..M.
[[nodiscard]] bool is_mixed_highest_weight(const Weight& w, const SuperRank& rank, Modulus p);

/// Relevance of the orbit labelled by (lambda, (theta, theta')), where theta
/// has length M+1 and theta' holds the remaining N-M-1 entries. The chain
/// runs through theta_{M+1} into theta'; condition B uses the same i-ranges as
/// is_mixed_highest_weight and never looks at theta'.
[[nodiscard]] bool is_relevant_orbit(const Weight& w, const SuperRank& rank, Modulus p,
                                     GroupConvention g);

/// Sparse N x N matrix of t-exponents; a present entry e is the monomial t^e,
/// absent entries are zero.
struct OrbitMatrix {
  int size = 0;
  std::map<std::pair<int, int>, Coord> entries;  // 1-based (row, col), row-major

  friend bool operator==(const OrbitMatrix&, const OrbitMatrix&) = default;
};

/// Representative of the orbit labelled by w:
///   (i, i)       -> -lambda_i - theta_i   for i = 1..M
///   (M+1, c)     -> -theta_c              for c = 1..M+1
///   (M+1+r, M+1+r) -> -theta'_r           for r = 1..N-M-1
[[nodiscard]] OrbitMatrix orbit_representative(const Weight& w, const SuperRank& rank);

}  // namespace glmn
