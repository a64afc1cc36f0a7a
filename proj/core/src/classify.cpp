#include "glmn/classify.hpp"

#include <cstddef>

namespace glmn {

std::string_view to_string(GroupConvention g) noexcept {
  return g == GroupConvention::UMinus ? "uminus" : "uplus";
}

bool is_standard_dominant(const Weight& w, const SuperRank& rank) {
  check_matches(w, rank);
  return non_increasing(w.lambda) && non_increasing(w.theta);
}

namespace {

// Condition B with 1-based indices as written; lambda and theta are the
// first M and M+1 coordinates respectively.
bool condition_b(std::span<const Coord> lambda, std::span<const Coord> theta, Modulus p) {
  const std::size_t m = lambda.size();
  auto diagonal_vanishes = [&](std::size_t i) {
    return congruent_zero(lambda[i - 1] + theta[i - 1], p);
  };
  for (std::size_t i = 1; i <= m; ++i) {
    if (theta[i - 1] == theta[i] && !diagonal_vanishes(i)) return false;
  }
  for (std::size_t i = 2; i <= m; ++i) {
    if (lambda[i - 2] == lambda[i - 1] && !diagonal_vanishes(i)) return false;
  }
  return true;
}

}  // namespace

bool is_mixed_highest_weight(const Weight& w, const SuperRank& rank, Modulus p) {
  if (!is_standard_dominant(w, rank)) return false;
  return condition_b(w.lambda, std::span<const Coord>(w.theta).first(w.lambda.size() + 1), p);
}

bool is_relevant_orbit(const Weight& w, const SuperRank& rank, Modulus p, GroupConvention g) {
  const ThetaSplit split = split_theta(w, rank);

  // theta_1 .. theta_{M+1}, theta'_1 .. theta'_{N-M-1}
  const std::vector<Coord> chain = join_theta(split);
  const bool chains_ok = g == GroupConvention::UPlus
                             ? non_increasing(w.lambda) && non_increasing(chain)
                             : non_decreasing(w.lambda) && non_decreasing(chain);
  return chains_ok && condition_b(w.lambda, split.head, p);
}

OrbitMatrix orbit_representative(const Weight& w, const SuperRank& rank) {
  const ThetaSplit split = split_theta(w, rank);
  const int m = rank.m();

  OrbitMatrix mat;
  mat.size = rank.n();
  for (int i = 1; i <= m; ++i) {
    mat.entries[{i, i}] = -w.lambda[static_cast<std::size_t>(i - 1)] -
                          split.head[static_cast<std::size_t>(i - 1)];
  }
  for (int c = 1; c <= m + 1; ++c) {
    mat.entries[{m + 1, c}] = -split.head[static_cast<std::size_t>(c - 1)];
  }
  for (std::size_t r = 1; r <= split.tail.size(); ++r) {
    const int d = m + 1 + static_cast<int>(r);
    mat.entries[{d, d}] = -split.tail[r - 1];
  }
  return mat;
}

}  // namespace glmn
