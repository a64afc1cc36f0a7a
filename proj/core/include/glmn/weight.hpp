#pragma once

// Weight lattice of GL(M|N): super rank, integral weights, and the modulus
// that selects between exact and mod-p congruence tests.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace glmn {

using Coord = std::int64_t;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad rank, modulus, dimensions, step order or box.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its configured limit or cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A computed structure contradicts an identity the library relies on.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Number of even (M) and odd (N) basis vectors. Requires 0 <= M < N.
class SuperRank {
 public:
  SuperRank(int even, int odd);

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int total() const noexcept { return m_ + n_; }

  friend bool operator==(const SuperRank&, const SuperRank&) = default;

 private:
  int m_;
  int n_;
};

/// p == 0 is the generic regime (exact vanishing); otherwise p is prime.
class Modulus {
 public:
  explicit Modulus(std::int64_t p);

  static Modulus generic() { return Modulus{0}; }

  [[nodiscard]] std::int64_t value() const noexcept { return p_; }
  [[nodiscard]] bool is_generic() const noexcept { return p_ == 0; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t p_;
};

[[nodiscard]] bool is_prime(std::int64_t n) noexcept;

/// a == 0 for the generic modulus, a == 0 mod p otherwise (sign-agnostic).
[[nodiscard]] bool congruent_zero(Coord a, Modulus p) noexcept;

/// Remainder of a in [0, p); a itself when p is generic.
[[nodiscard]] Coord residue(Coord a, Modulus p) noexcept;

struct Weight {
  std::vector<Coord> lambda;
  std::vector<Coord> theta;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Throws ValidationError unless |lambda| == M and |theta| == N.
void check_matches(const Weight& w, const SuperRank& rank);

[[nodiscard]] std::string to_string(const Weight& w);

/// theta split as (theta_1..theta_{M+1}) ++ (theta'_1..theta'_{N-M-1}).
struct ThetaSplit {
  std::vector<Coord> head;
  std::vector<Coord> tail;

  friend bool operator==(const ThetaSplit&, const ThetaSplit&) = default;
};

[[nodiscard]] ThetaSplit split_theta(const Weight& w, const SuperRank& rank);
[[nodiscard]] std::vector<Coord> join_theta(const ThetaSplit& split);

/// Entry-wise: values[k] >= values[k+1] for every k.
[[nodiscard]] bool non_increasing(std::span<const Coord> values) noexcept;
[[nodiscard]] bool non_decreasing(std::span<const Coord> values) noexcept;

}  // namespace glmn
