#include "glmn/json_io.hpp"

namespace glmn {

using nlohmann::json;

json weight_to_json(const Weight& w) { return json{{"lambda", w.lambda}, {"theta", w.theta}}; }

namespace {

std::vector<Coord> int_array(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing \"") + key + "\"");
  if (!it->is_array()) throw ValidationError(std::string("\"") + key + "\" is not an array");
  std::vector<Coord> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number_integer()) {
      throw ValidationError(std::string("\"") + key + "\" holds a non-integer entry");
    }
    out.push_back(v.get<Coord>());
  }
  return out;
}

}  // namespace

Weight weight_from_json(const json& j, const SuperRank& rank) {
  if (!j.is_object()) throw ValidationError("weight must be a JSON object");
  Weight w{int_array(j, "lambda"), int_array(j, "theta")};
  check_matches(w, rank);
  return w;
}

json pairs_to_json(const std::vector<PairIndex>& pairs) {
  json out = json::array();
  for (const auto& x : pairs) out.push_back({x.i, x.j});
  return out;
}

std::vector<PairIndex> pairs_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("step order must be an array of [i,j] pairs");
  std::vector<PairIndex> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ValidationError("step order entry " + e.dump() + " is not an [i,j] pair");
    }
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

json roots_to_json(const std::set<Root>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back({r.a, r.b});
  return out;
}

json trace_to_json(const Trace& trace) {
  json records = json::array();
  for (const auto& rec : trace.records) {
    records.push_back({{"k", rec.k},
                       {"pair", {rec.pair.i, rec.pair.j}},
                       {"action", to_string(rec.action)},
                       {"sum_before", rec.sum_before},
                       {"state_after", weight_to_json(rec.state_after)}});
  }
  return records;
}

json matrix_to_json(const OrbitMatrix& mat) {
  json entries = json::array();
  for (const auto& [cell, e] : mat.entries) entries.push_back({cell.first, cell.second, e});
  return json{{"size", mat.size}, {"entries", std::move(entries)}};
}

json report_to_json(const VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"weight", weight_to_json(f.weight)}, {"detail", f.detail}});
  }
  return json{{"check_name", report.check_name},
              {"total", report.total},
              {"failure_count", report.failure_count},
              {"failures", std::move(failures)},
              {"passed", report.passed}};
}

}  // namespace glmn
