#include "glmn/serganova.hpp"

#include <algorithm>
#include <string>

namespace glmn {

namespace {

std::vector<PairIndex> pairs_for(int m) {
  if (m < 0) throw ValidationError("M must be nonnegative, got " + std::to_string(m));
  return excess_pairs(SuperRank{m, m + 1});
}

std::string describe(PairIndex x) {
  return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
}

}  // namespace

StepOrder::StepOrder(std::vector<PairIndex> steps, int m) : steps_(std::move(steps)), m_(m) {
  auto expected = pairs_for(m);
  auto sorted = steps_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected) {
    throw ValidationError("step order is not a permutation of the excess pairs for M=" +
                          std::to_string(m));
  }
  for (std::size_t s = 0; s < steps_.size(); ++s) {
    for (std::size_t t = s + 1; t < steps_.size(); ++t) {
      if (pair_leq(steps_[t], steps_[s])) {
        throw ValidationError("step order is not a linear extension: " + describe(steps_[t]) +
                              " must precede " + describe(steps_[s]));
      }
    }
  }
}

StepOrder order_v1(int m) {
  std::vector<PairIndex> steps;
  for (int j = 1; j <= m; ++j) {
    for (int i = m; i >= j; --i) steps.push_back({i, j});
  }
  return StepOrder{std::move(steps), m};
}

StepOrder order_v2(int m) {
  std::vector<PairIndex> steps;
  for (int i = m; i >= 1; --i) {
    for (int j = 1; j <= i; ++j) steps.push_back({i, j});
  }
  return StepOrder{std::move(steps), m};
}

namespace {

struct ExtensionSearch {
  const std::vector<PairIndex>& elems;
  std::size_t cap;
  int m;
  std::vector<bool> placed;
  std::vector<PairIndex> prefix;
  std::vector<StepOrder> out;

  bool is_minimal(std::size_t x) const {
    for (std::size_t y = 0; y < elems.size(); ++y) {
      if (y != x && !placed[y] && pair_leq(elems[y], elems[x])) return false;
    }
    return true;
  }

  void run() {
    if (prefix.size() == elems.size()) {
      if (out.size() == cap) {
        throw CapacityError("more than " + std::to_string(cap) +
                            " linear extensions for M=" + std::to_string(m));
      }
      out.emplace_back(prefix, m);
      return;
    }
    // elems is sorted, so candidates are tried in lexicographic order.
    for (std::size_t x = 0; x < elems.size(); ++x) {
      if (placed[x] || !is_minimal(x)) continue;
      placed[x] = true;
      prefix.push_back(elems[x]);
      run();
      prefix.pop_back();
      placed[x] = false;
    }
  }
};

}  // namespace

std::vector<StepOrder> all_linear_extensions(int m, std::size_t cap) {
  if (cap == 0) throw ValidationError("extension cap must be positive");
  const auto elems = pairs_for(m);
  ExtensionSearch search{elems, cap, m, std::vector<bool>(elems.size(), false), {}, {}};
  search.prefix.reserve(elems.size());
  search.run();
  return std::move(search.out);
}

std::string_view to_string(Action a) noexcept {
  return a == Action::NoOp ? "noop" : "move";
}

std::string_view to_string(Direction d) noexcept {
  return d == Direction::Forward ? "forward" : "inverse";
}

namespace {

RunResult run(const Weight& w, Modulus p, const StepOrder& order, const SuperRank& rank,
              Direction direction) {
  check_matches(w, rank);
  if (order.m() != rank.m()) {
    throw ValidationError("step order is for M=" + std::to_string(order.m()) +
                          " but rank has M=" + std::to_string(rank.m()));
  }
  const Coord shift = direction == Direction::Forward ? 1 : -1;

  RunResult result{w, Trace{direction, order, {}}};
  Weight& state = result.weight;
  auto& records = result.trace.records;
  records.reserve(order.size());

  const auto& steps = order.steps();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const PairIndex pair =
        direction == Direction::Forward ? steps[s] : steps[steps.size() - 1 - s];
    Coord& lam = state.lambda[static_cast<std::size_t>(pair.i - 1)];
    Coord& th = state.theta[static_cast<std::size_t>(pair.j - 1)];
    const Coord sum = lam + th;
    Action action = Action::NoOp;
    if (!congruent_zero(sum, p)) {
      lam -= shift;
      th += shift;
      action = Action::Move;
    }
    records.push_back(StepRecord{static_cast<int>(s) + 1, pair, action, sum, state});
  }
  return result;
}

}  // namespace

RunResult forward(const Weight& w, Modulus p, const StepOrder& order, const SuperRank& rank) {
  return run(w, p, order, rank, Direction::Forward);
}

RunResult inverse(const Weight& w, Modulus p, const StepOrder& order, const SuperRank& rank) {
  return run(w, p, order, rank, Direction::Inverse);
}

}  // namespace glmn
