#include "glmn/weight.hpp"

#include <algorithm>
#include <sstream>

namespace glmn {

SuperRank::SuperRank(int even, int odd) : m_(even), n_(odd) {
  if (even < 0) {
    throw ValidationError("M must be nonnegative, got " + std::to_string(even));
  }
  if (even >= odd) {
    throw ValidationError("M < N required, got M=" + std::to_string(even) +
                          " N=" + std::to_string(odd));
  }
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::int64_t p) : p_(p) {
  if (p != 0 && !is_prime(p)) {
    throw ValidationError("modulus must be 0 or prime, got " + std::to_string(p));
  }
}

Coord residue(Coord a, Modulus p) noexcept {
  if (p.is_generic()) return a;
  const Coord r = a % p.value();
  return r < 0 ? r + p.value() : r;
}

bool congruent_zero(Coord a, Modulus p) noexcept { return residue(a, p) == 0; }

void check_matches(const Weight& w, const SuperRank& rank) {
  if (w.lambda.size() != static_cast<std::size_t>(rank.m()) ||
      w.theta.size() != static_cast<std::size_t>(rank.n())) {
    throw ValidationError("weight " + to_string(w) + " does not match rank (M=" +
                          std::to_string(rank.m()) + ", N=" + std::to_string(rank.n()) +
                          ")");
  }
}

namespace {

void write_tuple(std::ostream& os, const std::vector<Coord>& xs) {
  os << '(';
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) os << ',';
    os << xs[k];
  }
  os << ')';
}

}  // namespace

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  write_tuple(os, w.lambda);
  os << ',';
  write_tuple(os, w.theta);
  os << ')';
  return os.str();
}

ThetaSplit split_theta(const Weight& w, const SuperRank& rank) {
  check_matches(w, rank);
  const auto cut = w.theta.begin() + (rank.m() + 1);
  return ThetaSplit{{w.theta.begin(), cut}, {cut, w.theta.end()}};
}

std::vector<Coord> join_theta(const ThetaSplit& split) {
  std::vector<Coord> out = split.head;
  out.insert(out.end(), split.tail.begin(), split.tail.end());
  return out;
}

bool non_increasing(std::span<const Coord> values) noexcept {
  return std::is_sorted(values.begin(), values.end(), std::greater<>{});
}

bool non_decreasing(std::span<const Coord> values) noexcept {
  return std::is_sorted(values.begin(), values.end());
}

}  // namespace glmn
