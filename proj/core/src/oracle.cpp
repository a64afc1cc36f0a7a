#include "glmn/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace glmn {

Box::Box(Coord lo_, Coord hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) {
    throw ValidationError("box requires lo <= hi, got " + std::to_string(lo) + ":" +
                          std::to_string(hi));
  }
}

std::uint64_t Box::cardinality(int dims) const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto side = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t total = 1;
  for (int d = 0; d < dims; ++d) {
    if (total > kMax / side) return kMax;
    total *= side;
  }
  return total;
}

namespace {

void check_limit(const SuperRank& rank, const Box& box, std::uint64_t limit) {
  const auto card = box.cardinality(rank.total());
  if (card > limit) {
    throw CapacityError("box [" + std::to_string(box.lo) + "," + std::to_string(box.hi) +
                        "]^" + std::to_string(rank.total()) + " holds " + std::to_string(card) +
                        " weights, above the enumeration limit " + std::to_string(limit));
  }
}

// Odometer over the box with the first coordinate optionally pinned. The
// last theta coordinate varies fastest, which yields lexicographic order.
std::uint64_t enumerate_slice(const SuperRank& rank, const Box& box,
                              std::optional<Coord> first, const WeightFilter& filter,
                              const WeightSink& sink) {
  const auto dims = static_cast<std::size_t>(rank.total());
  const auto m = static_cast<std::size_t>(rank.m());
  std::vector<Coord> coords(dims, box.lo);
  const std::size_t free_from = first ? 1 : 0;
  if (first) coords[0] = *first;

  Weight w{std::vector<Coord>(m), std::vector<Coord>(dims - m)};
  std::uint64_t emitted = 0;
  while (true) {
    std::copy_n(coords.begin(), m, w.lambda.begin());
    std::copy(coords.begin() + static_cast<std::ptrdiff_t>(m), coords.end(), w.theta.begin());
    if (!filter || filter(w)) {
      sink(w);
      ++emitted;
    }
    bool advanced = false;
    for (std::size_t d = dims; d > free_from && !advanced; --d) {
      if (coords[d - 1] < box.hi) {
        ++coords[d - 1];
        advanced = true;
      } else {
        coords[d - 1] = box.lo;
      }
    }
    if (!advanced) return emitted;
  }
}

std::string format_pairs(const std::vector<PairIndex>& steps) {
  std::ostringstream os;
  os << '[';
  for (std::size_t s = 0; s < steps.size(); ++s) {
    if (s) os << ',';
    os << '(' << steps[s].i << ',' << steps[s].j << ')';
  }
  os << ']';
  return os.str();
}

// Failures collected on one partition of the box.
class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  void examined(std::uint64_t n = 1) { total_ += n; }

  void fail(const Weight& w, std::string detail) {
    ++count_;
    failures_.push_back(Failure{w, std::move(detail)});
    if (failures_.size() > 2 * cap_ + 16) trim();
  }

  void trim() {
    std::sort(failures_.begin(), failures_.end());
    if (failures_.size() > cap_) failures_.resize(cap_);
  }

  void merge_into(VerificationReport& report) {
    trim();
    report.total += total_;
    report.failure_count += count_;
    report.failures.insert(report.failures.end(), failures_.begin(), failures_.end());
  }

 private:
  std::size_t cap_;
  std::uint64_t total_ = 0;
  std::uint64_t count_ = 0;
  std::vector<Failure> failures_;
};

using WeightCheck = std::function<void(const Weight&, Collector&)>;

VerificationReport run_check(std::string name, const SuperRank& rank, const Box& box,
                             const VerifyOptions& opts, const WeightCheck& check) {
  if (opts.failure_cap == 0) throw ValidationError("failure cap must be positive");
  check_limit(rank, box, opts.limit);

  const auto side = static_cast<std::size_t>(box.hi - box.lo) + 1;
  std::vector<Collector> parts(side, Collector{opts.failure_cap});
  auto run_part = [&](std::size_t idx) {
    Collector& c = parts[idx];
    enumerate_slice(rank, box, box.lo + static_cast<Coord>(idx), {},
                    [&](const Weight& w) { check(w, c); });
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, side));
  if (workers == 1) {
    for (std::size_t idx = 0; idx < side; ++idx) run_part(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t idx = next++; idx < side; idx = next++) run_part(idx);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  VerificationReport report;
  report.check_name = std::move(name);
  for (auto& c : parts) c.merge_into(report);
  std::sort(report.failures.begin(), report.failures.end());
  if (report.failures.size() > opts.failure_cap) report.failures.resize(opts.failure_cap);
  report.passed = report.failures.empty();
  return report;
}

}  // namespace

std::uint64_t enumerate_box(const SuperRank& rank, const Box& box, const WeightFilter& filter,
                            const WeightSink& sink, std::uint64_t limit) {
  check_limit(rank, box, limit);
  return enumerate_slice(rank, box, std::nullopt, filter, sink);
}

VerificationReport verify_image(const SuperRank& rank, Modulus p, const Box& box,
                                const VerifyOptions& opts, const Algorithms& algos) {
  const StepOrder order = order_v1(rank.m());
  return run_check("image", rank, box, opts, [&](const Weight& w, Collector& c) {
    if (algos.standard_dominant(w, rank)) {
      c.examined();
      const Weight image = algos.forward(w, p, order, rank).weight;
      if (!algos.mixed_highest_weight(image, rank, p)) {
        c.fail(w, "forward image " + to_string(image) + " is not a mixed highest weight");
      } else if (const Weight back = algos.inverse(image, p, order, rank).weight; back != w) {
        c.fail(w, "inverse(forward) gives " + to_string(back));
      }
    }
    if (algos.mixed_highest_weight(w, rank, p)) {
      c.examined();
      const Weight pre = algos.inverse(w, p, order, rank).weight;
      if (!algos.standard_dominant(pre, rank)) {
        c.fail(w, "inverse " + to_string(pre) + " is not standard dominant");
      } else if (const Weight again = algos.forward(pre, p, order, rank).weight; again != w) {
        c.fail(w, "forward(inverse) gives " + to_string(again));
      }
    }
  });
}

VerificationReport verify_order_invariance(const SuperRank& rank, Modulus p, const Box& box,
                                           const VerifyOptions& opts, const Algorithms& algos) {
  const auto extensions = all_linear_extensions(rank.m(), opts.extension_cap);
  const StepOrder reference = order_v1(rank.m());
  return run_check("order", rank, box, opts, [&](const Weight& w, Collector& c) {
    if (!algos.standard_dominant(w, rank)) return;
    const Weight expected = algos.forward(w, p, reference, rank).weight;
    for (const auto& order : extensions) {
      c.examined();
      const Weight got = algos.forward(w, p, order, rank).weight;
      if (got != expected) {
        c.fail(w, "order " + format_pairs(order.steps()) + " gives " + to_string(got) +
                      ", order_v1 gives " + to_string(expected));
      }
    }
  });
}

VerificationReport verify_theorem(const SuperRank& rank, Modulus p, const Box& box,
                                  const VerifyOptions& opts, const Algorithms& algos) {
  if (p.is_generic()) {
    throw ValidationError("the orbit/highest-weight equality check requires a prime modulus");
  }
  const StepOrder order = order_v1(rank.m());
  return run_check("theorem", rank, box, opts, [&](const Weight& w, Collector& c) {
    c.examined();
    const bool relevant = algos.relevant(w, rank, p);
    const Weight pre = algos.inverse(w, p, order, rank).weight;
    const bool in_image =
        algos.standard_dominant(pre, rank) && algos.forward(pre, p, order, rank).weight == w;
    if (relevant != in_image) {
      c.fail(w, std::string("relevant=") + (relevant ? "true" : "false") +
                    " but image membership=" + (in_image ? "true" : "false"));
    }
  });
}

std::vector<std::string> trace_violations(const Weight& start, const Trace& trace, Modulus p,
                                          const SuperRank& rank) {
  std::vector<std::string> out;
  const auto m = static_cast<std::size_t>(rank.m());
  const bool is_v1 = trace.order_used == order_v1(rank.m());
  const bool is_v2 = trace.order_used == order_v2(rank.m());

  auto coordinate_sum = [](const Weight& w) {
    return std::accumulate(w.lambda.begin(), w.lambda.end(), Coord{0}) +
           std::accumulate(w.theta.begin(), w.theta.end(), Coord{0});
  };
  const Coord initial_sum = coordinate_sum(start);
  if (trace.records.size() != trace.order_used.size()) {
    out.push_back("trace has " + std::to_string(trace.records.size()) + " records, expected " +
                  std::to_string(trace.order_used.size()));
  }

  for (const auto& rec : trace.records) {
    const Weight& s = rec.state_after;
    const std::string at = "step " + std::to_string(rec.k) + ": ";
    if (is_v1 && !non_increasing(s.lambda)) {
      out.push_back(at + "lambda not non-increasing under order_v1");
    }
    if (is_v2 && !non_increasing(std::span<const Coord>(s.theta).first(m + 1))) {
      out.push_back(at + "theta head not non-increasing under order_v2");
    }
    if (coordinate_sum(s) != initial_sum) out.push_back(at + "coordinate sum changed");
    const Coord after = s.lambda[static_cast<std::size_t>(rec.pair.i - 1)] +
                        s.theta[static_cast<std::size_t>(rec.pair.j - 1)];
    if (residue(after, p) != residue(rec.sum_before, p)) {
      out.push_back(at + "visited sum changed residue");
    }
    if ((rec.action == Action::NoOp) != congruent_zero(rec.sum_before, p)) {
      out.push_back(at + "action disagrees with the congruence test");
    }
    if (!std::equal(s.theta.begin() + static_cast<std::ptrdiff_t>(m + 1), s.theta.end(),
                    start.theta.begin() + static_cast<std::ptrdiff_t>(m + 1))) {
      out.push_back(at + "entries past theta_{M+1} changed");
    }
  }
  return out;
}

VerificationReport verify_trace_invariants(const SuperRank& rank, Modulus p, const Box& box,
                                           const VerifyOptions& opts, const Algorithms& algos) {
  const StepOrder v1 = order_v1(rank.m());
  const StepOrder v2 = order_v2(rank.m());
  return run_check("trace", rank, box, opts, [&](const Weight& w, Collector& c) {
    if (!algos.standard_dominant(w, rank)) return;
    c.examined();
    for (const StepOrder* order : {&v1, &v2}) {
      const RunResult run = algos.forward(w, p, *order, rank);
      for (auto& v : trace_violations(w, run.trace, p, rank)) {
        c.fail(w, (order == &v1 ? "order_v1 " : "order_v2 ") + v);
      }
    }
  });
}

}  // namespace glmn
