#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "glmn/json_io.hpp"
#include "glmn/roots.hpp"

namespace glmn::cli {

using nlohmann::json;

namespace {

struct RawArgs {
  int m = -1;
  int n = -1;
  std::optional<std::int64_t> p;
  std::string convention = "uplus";
  std::string order = "v1";
  std::string direction = "forward";
  std::string check = "all";
  std::string filter = "none";
  std::string format = "jsonl";
  std::string box;
  std::string word;
  bool trace = false;
  std::size_t cap = kDefaultExtensionCap;
  std::size_t max_failures = kDefaultFailureCap;
  std::uint64_t limit = kDefaultEnumerationLimit;
  unsigned threads = 1;
};

bool parse_int(std::string_view s, Coord& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

template <typename E>
std::optional<E> lookup(const std::map<std::string, E>& table, const std::string& key) {
  const auto it = table.find(key);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Coord v = 0;
    if (!parse_int(item, v)) throw ValidationError("malformed --word entry \"" + item + "\"");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

StepOrder load_order(const std::string& name, int m) {
  if (name == "v1") return order_v1(m);
  if (name == "v2") return order_v2(m);
  if (name.rfind("file:", 0) == 0) {
    const std::string path = name.substr(5);
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open order file " + path);
    json j;
    try {
      j = json::parse(file);
    } catch (const json::exception& e) {
      throw ValidationError("order file " + path + ": " + e.what());
    }
    return StepOrder{pairs_from_json(j), m};
  }
  throw ValidationError("--order must be v1, v2 or file:PATH, got \"" + name + "\"");
}

// Checks every field the chosen subcommand uses and reports all problems.
ParseOutcome validate(Command command, const RawArgs& raw, bool box_given) {
  std::vector<std::string> errors;
  auto attempt = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      errors.emplace_back(e.what());
    }
  };

  std::optional<SuperRank> rank;
  attempt([&] { rank.emplace(raw.m, raw.n); });
  std::optional<Modulus> p;
  attempt([&] { p.emplace(raw.p.value_or(0)); });

  const auto convention = lookup<GroupConvention>(
      {{"uminus", GroupConvention::UMinus}, {"uplus", GroupConvention::UPlus}}, raw.convention);
  if (!convention) errors.push_back("--convention must be uminus or uplus");
  const auto direction = lookup<Direction>(
      {{"forward", Direction::Forward}, {"inverse", Direction::Inverse}}, raw.direction);
  if (!direction) errors.push_back("--direction must be forward or inverse");
  const auto check = lookup<Check>({{"image", Check::Image},
                                    {"order", Check::Order},
                                    {"theorem", Check::Theorem},
                                    {"trace", Check::Trace},
                                    {"all", Check::All}},
                                   raw.check);
  if (!check) errors.push_back("--check must be one of image, order, theorem, trace, all");
  const auto filter = lookup<Filter>({{"none", Filter::None},
                                      {"standard", Filter::Standard},
                                      {"mixed", Filter::Mixed},
                                      {"relevant", Filter::Relevant}},
                                     raw.filter);
  if (!filter) errors.push_back("--filter must be one of none, standard, mixed, relevant");
  const auto format = lookup<OutputFormat>(
      {{"json", OutputFormat::Json}, {"jsonl", OutputFormat::Jsonl}, {"csv", OutputFormat::Csv}},
      raw.format);
  if (!format) errors.push_back("--format must be json, jsonl or csv");

  std::optional<Box> box;
  if (box_given) attempt([&] { box = parse_box(raw.box); });
  if ((command == Command::Verify || command == Command::Enumerate) && !box_given) {
    errors.push_back("--box LO:HI is required");
  }
  if (box && rank && box->cardinality(rank->total()) > raw.limit) {
    errors.push_back("box holds " + std::to_string(box->cardinality(rank->total())) +
                     " weights, above --limit " + std::to_string(raw.limit));
  }

  std::optional<StepOrder> order;
  if (rank) attempt([&] { order = load_order(raw.order, rank->m()); });

  std::optional<std::vector<int>> word;
  if (!raw.word.empty()) {
    attempt([&] {
      word = parse_word(raw.word);
      if (rank) (void)BorelWord(*word, *rank);
    });
  }

  if (command == Command::Verify && p && p->is_generic() && check &&
      (*check == Check::Theorem || *check == Check::All)) {
    errors.push_back("--check theorem (and all) requires a prime --p");
  }
  if (format == OutputFormat::Csv &&
      (command == Command::Verify || command == Command::OrbitRep || command == Command::Roots)) {
    errors.push_back("--format csv is not available for this subcommand");
  }
  if (format == OutputFormat::Csv && raw.trace) {
    errors.push_back("--trace requires json or jsonl output");
  }
  if (raw.cap == 0) errors.push_back("--cap must be positive");
  if (raw.max_failures == 0) errors.push_back("--max-failures must be positive");
  if (raw.threads == 0) errors.push_back("--threads must be positive");

  ParseOutcome outcome;
  if (!errors.empty()) {
    outcome.exit_code = kExitUsage;
    for (const auto& e : errors) outcome.message += "error: " + e + "\n";
    return outcome;
  }
  outcome.config.emplace(RunConfig{
      .command = command,
      .rank = *rank,
      .p = *p,
      .convention = *convention,
      .order = *order,
      .order_name = raw.order,
      .direction = *direction,
      .trace = raw.trace,
      .box = box,
      .check = *check,
      .filter = *filter,
      .word = word,
      .extension_cap = raw.cap,
      .max_failures = raw.max_failures,
      .limit = raw.limit,
      .threads = raw.threads,
      .format = *format,
  });
  return outcome;
}

}  // namespace

Box parse_box(const std::string& text) {
  const auto colon = text.find(':', text.empty() ? 0 : 1);
  Coord lo = 0;
  Coord hi = 0;
  if (colon == std::string::npos || !parse_int(std::string_view(text).substr(0, colon), lo) ||
      !parse_int(std::string_view(text).substr(colon + 1), hi)) {
    throw ValidationError("malformed box \"" + text + "\", expected LO:HI");
  }
  return Box{lo, hi};
}

ParseOutcome parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Serganova's algorithm and relevant-orbit combinatorics for GL(M|N)", "glmn"};
  app.require_subcommand(1);
  RawArgs raw;

  auto add_rank = [&](CLI::App* sub, bool required) {
    auto* m = sub->add_option("--M", raw.m, "number of even basis vectors");
    auto* n = sub->add_option("--N", raw.n, "number of odd basis vectors");
    if (required) {
      m->required();
      n->required();
    }
  };
  auto add_p = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", raw.p, "0 for generic q, otherwise a prime");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "json | jsonl | csv");
  };

  auto* transform = app.add_subcommand("transform", "run the algorithm on weights from stdin");
  add_rank(transform, true);
  add_p(transform, true);
  transform->add_option("--direction", raw.direction, "forward | inverse");
  transform->add_option("--order", raw.order, "v1 | v2 | file:PATH");
  transform->add_flag("--trace", raw.trace, "include the per-step trace");
  add_format(transform);

  auto* classify = app.add_subcommand("classify", "membership predicates for weights from stdin");
  add_rank(classify, true);
  add_p(classify, true);
  classify->add_option("--convention", raw.convention, "uminus | uplus");
  add_format(classify);

  auto* orbit = app.add_subcommand("orbit-rep", "orbit representative matrices");
  add_rank(orbit, true);
  add_format(orbit);

  auto* roots = app.add_subcommand("roots", "positive roots, excess pairs and their order");
  add_rank(roots, true);
  roots->add_option("--word", raw.word, "comma-separated Borel word, e.g. 2,1,3");

  auto* enumerate = app.add_subcommand("enumerate", "list the weights of a box");
  add_rank(enumerate, true);
  add_p(enumerate, false);
  enumerate->add_option("--box", raw.box, "LO:HI");
  enumerate->add_option("--filter", raw.filter, "none | standard | mixed | relevant");
  enumerate->add_option("--convention", raw.convention, "uminus | uplus");
  enumerate->add_option("--limit", raw.limit, "enumeration limit");
  add_format(enumerate);

  auto* verify = app.add_subcommand("verify", "exhaustive checks over a box");
  add_rank(verify, true);
  add_p(verify, true);
  verify->add_option("--box", raw.box, "LO:HI");
  verify->add_option("--check", raw.check, "image | order | theorem | trace | all");
  verify->add_option("--cap", raw.cap, "maximum number of linear extensions");
  verify->add_option("--max-failures", raw.max_failures, "counterexamples kept per check");
  verify->add_option("--limit", raw.limit, "enumeration limit");
  verify->add_option("--threads", raw.threads, "worker threads");
  add_format(verify);

  // Box arguments such as "-2:2" start with a dash; fold "--box X" into
  // "--box=X" so the parser does not read the value as a flag.
  std::vector<std::string> args;
  for (std::size_t k = 1; k < argv.size(); ++k) {
    if (argv[k] == "--box" && k + 1 < argv.size()) {
      args.push_back("--box=" + argv[++k]);
    } else {
      args.push_back(argv[k]);
    }
  }
  std::reverse(args.begin(), args.end());

  ParseOutcome outcome;
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    outcome.exit_code = kExitOk;
    outcome.message = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.exit_code = kExitOk;
    outcome.message = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = "error: " + std::string(e.what()) + "\n";
    return outcome;
  }

  Command command = Command::Transform;
  const std::pair<CLI::App*, Command> table[] = {
      {transform, Command::Transform}, {classify, Command::Classify},
      {orbit, Command::OrbitRep},      {roots, Command::Roots},
      {enumerate, Command::Enumerate}, {verify, Command::Verify}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) command = cmd;
  }
  const bool box_given = (command == Command::Verify && verify->count("--box") > 0) ||
                         (command == Command::Enumerate && enumerate->count("--box") > 0);
  return validate(command, raw, box_given);
}

namespace {

// Writes records in the configured format; json collects into one array.
class Emitter {
 public:
  Emitter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}
  ~Emitter() {
    if (format_ == OutputFormat::Json) out_ << collected_.dump(2) << '\n';
  }
  Emitter(const Emitter&) = delete;
  Emitter& operator=(const Emitter&) = delete;

  void header(const std::vector<std::string>& columns) {
    if (format_ != OutputFormat::Csv) return;
    for (std::size_t k = 0; k < columns.size(); ++k) out_ << (k ? "," : "") << columns[k];
    out_ << '\n';
  }

  void record(const json& j, const std::vector<std::string>& csv_row) {
    switch (format_) {
      case OutputFormat::Json:
        collected_.push_back(j);
        break;
      case OutputFormat::Jsonl:
        out_ << j.dump() << '\n';
        break;
      case OutputFormat::Csv:
        for (std::size_t k = 0; k < csv_row.size(); ++k) out_ << (k ? "," : "") << csv_row[k];
        out_ << '\n';
        break;
    }
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
  json collected_ = json::array();
};

std::vector<std::string> weight_columns(const SuperRank& rank) {
  std::vector<std::string> cols;
  for (int i = 1; i <= rank.m(); ++i) cols.push_back("lambda_" + std::to_string(i));
  for (int j = 1; j <= rank.n(); ++j) cols.push_back("theta_" + std::to_string(j));
  return cols;
}

std::vector<std::string> weight_cells(const Weight& w) {
  std::vector<std::string> cells;
  for (Coord v : w.lambda) cells.push_back(std::to_string(v));
  for (Coord v : w.theta) cells.push_back(std::to_string(v));
  return cells;
}

// Applies `handle` to each non-blank input line parsed as a weight. Returns
// false if any line was malformed.
template <typename Handler>
bool for_each_input(std::istream& in, std::ostream& err, const SuperRank& rank,
                    Handler&& handle) {
  bool ok = true;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      handle(weight_from_json(json::parse(line), rank));
    } catch (const json::exception& e) {
      err << "line " << lineno << ": " << e.what() << '\n';
      ok = false;
    } catch (const ValidationError& e) {
      err << "line " << lineno << ": " << e.what() << '\n';
      ok = false;
    }
  }
  return ok;
}

const char* bool_cell(bool b) { return b ? "true" : "false"; }

int run_transform(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  Emitter emit(out, cfg.format);
  emit.header(weight_columns(cfg.rank));
  const bool ok = for_each_input(in, err, cfg.rank, [&](const Weight& w) {
    const RunResult r = cfg.direction == Direction::Forward
                            ? forward(w, cfg.p, cfg.order, cfg.rank)
                            : inverse(w, cfg.p, cfg.order, cfg.rank);
    json j = weight_to_json(r.weight);
    if (cfg.trace) j["trace"] = trace_to_json(r.trace);
    emit.record(j, weight_cells(r.weight));
  });
  return ok ? kExitOk : kExitFailure;
}

int run_classify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  Emitter emit(out, cfg.format);
  auto cols = weight_columns(cfg.rank);
  cols.insert(cols.end(), {"standard_dominant", "mixed_highest_weight", "relevant"});
  emit.header(cols);
  const bool ok = for_each_input(in, err, cfg.rank, [&](const Weight& w) {
    const bool dominant = is_standard_dominant(w, cfg.rank);
    const bool mixed = is_mixed_highest_weight(w, cfg.rank, cfg.p);
    const bool relevant = is_relevant_orbit(w, cfg.rank, cfg.p, cfg.convention);
    auto cells = weight_cells(w);
    cells.insert(cells.end(), {bool_cell(dominant), bool_cell(mixed), bool_cell(relevant)});
    emit.record(json{{"weight", weight_to_json(w)},
                     {"standard_dominant", dominant},
                     {"mixed_highest_weight", mixed},
                     {"relevant", relevant}},
                cells);
  });
  return ok ? kExitOk : kExitFailure;
}

int run_orbit_rep(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  Emitter emit(out, cfg.format);
  const bool ok = for_each_input(in, err, cfg.rank, [&](const Weight& w) {
    emit.record(matrix_to_json(orbit_representative(w, cfg.rank)), {});
  });
  return ok ? kExitOk : kExitFailure;
}

int run_roots(const RunConfig& cfg, std::ostream& out) {
  const SuperRank& rank = cfg.rank;
  const BorelWord mixed = mixed_word(rank);
  json covers = json::array();
  for (const auto& [x, y] : pair_covers(rank.m())) covers.push_back({{x.i, x.j}, {y.i, y.j}});
  json doc{{"M", rank.m()},
           {"N", rank.n()},
           {"standard_roots", roots_to_json(positive_roots(BorelWord::standard(rank), rank))},
           {"mixed_word", mixed.word()},
           {"mixed_roots", roots_to_json(positive_roots(mixed, rank))},
           {"excess_pairs", pairs_to_json(excess_pairs(rank))},
           {"hasse", std::move(covers)}};
  if (cfg.word) {
    const BorelWord omega(*cfg.word, rank);
    doc["word"] = omega.word();
    doc["word_roots"] = roots_to_json(positive_roots(omega, rank));
  }
  out << doc.dump(cfg.format == OutputFormat::Json ? 2 : -1) << '\n';
  return kExitOk;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  WeightFilter filter;
  switch (cfg.filter) {
    case Filter::None:
      break;
    case Filter::Standard:
      filter = [&](const Weight& w) { return is_standard_dominant(w, cfg.rank); };
      break;
    case Filter::Mixed:
      filter = [&](const Weight& w) { return is_mixed_highest_weight(w, cfg.rank, cfg.p); };
      break;
    case Filter::Relevant:
      filter = [&](const Weight& w) {
        return is_relevant_orbit(w, cfg.rank, cfg.p, cfg.convention);
      };
      break;
  }
  Emitter emit(out, cfg.format);
  emit.header(weight_columns(cfg.rank));
  enumerate_box(
      cfg.rank, *cfg.box, filter,
      [&](const Weight& w) { emit.record(weight_to_json(w), weight_cells(w)); }, cfg.limit);
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const VerifyOptions opts{.failure_cap = cfg.max_failures,
                           .limit = cfg.limit,
                           .extension_cap = cfg.extension_cap,
                           .threads = cfg.threads};
  std::vector<Check> checks;
  if (cfg.check == Check::All) {
    checks = {Check::Image, Check::Order, Check::Theorem, Check::Trace};
  } else {
    checks = {cfg.check};
  }
  Emitter emit(out, cfg.format);
  bool all_passed = true;
  for (Check c : checks) {
    VerificationReport report;
    switch (c) {
      case Check::Image:
        report = verify_image(cfg.rank, cfg.p, *cfg.box, opts);
        break;
      case Check::Order:
        report = verify_order_invariance(cfg.rank, cfg.p, *cfg.box, opts);
        break;
      case Check::Theorem:
        report = verify_theorem(cfg.rank, cfg.p, *cfg.box, opts);
        break;
      case Check::Trace:
        report = verify_trace_invariants(cfg.rank, cfg.p, *cfg.box, opts);
        break;
      case Check::All:
        break;
    }
    all_passed = all_passed && report.passed;
    json j = report_to_json(report);
    j["M"] = cfg.rank.m();
    j["N"] = cfg.rank.n();
    j["p"] = cfg.p.value();
    j["box"] = {cfg.box->lo, cfg.box->hi};
    emit.record(j, {});
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Transform:
        return run_transform(config, in, out, err);
      case Command::Classify:
        return run_classify(config, in, out, err);
      case Command::OrbitRep:
        return run_orbit_rep(config, in, out, err);
      case Command::Roots:
        return run_roots(config, out);
      case Command::Enumerate:
        return run_enumerate(config, out);
      case Command::Verify:
        return run_verify(config, out);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace glmn::cli
