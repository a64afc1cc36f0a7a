#pragma once

// Argument parsing and dispatch for the glmn tool. Every subcommand is a thin
// adapter over the core library.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glmn/classify.hpp"
#include "glmn/oracle.hpp"
#include "glmn/serganova.hpp"
#include "glmn/weight.hpp"

namespace glmn::cli {

enum class Command { Transform, Classify, OrbitRep, Roots, Enumerate, Verify };
enum class OutputFormat { Json, Jsonl, Csv };
enum class Check { Image, Order, Theorem, Trace, All };
enum class Filter { None, Standard, Mixed, Relevant };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

struct RunConfig {
  Command command;
  SuperRank rank;
  Modulus p = Modulus::generic();
  GroupConvention convention = GroupConvention::UPlus;
  StepOrder order;  // resolved from v1 | v2 | file:PATH
  std::string order_name = "v1";
  Direction direction = Direction::Forward;
  bool trace = false;
  std::optional<Box> box;
  Check check = Check::All;
  Filter filter = Filter::None;
  std::optional<std::vector<int>> word;  // roots: optional Borel word
  std::size_t extension_cap = kDefaultExtensionCap;
  std::size_t max_failures = kDefaultFailureCap;
  std::uint64_t limit = kDefaultEnumerationLimit;
  unsigned threads = 1;
  OutputFormat format = OutputFormat::Jsonl;
};

struct ParseOutcome {
  std::optional<RunConfig> config;  // set iff parsing and validation succeeded
  int exit_code = kExitOk;          // meaningful when config is empty
  std::string message;              // help text or every validation error
};

/// argv[0] is the program name.
[[nodiscard]] ParseOutcome parse_args(const std::vector<std::string>& argv);

/// Exit codes: 0 success, 1 verification failure or malformed input line,
/// 2 usage or validation error, 3 capacity or limit exceeded.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses "LO:HI"; throws ValidationError.
[[nodiscard]] Box parse_box(const std::string& text);

}  // namespace glmn::cli
