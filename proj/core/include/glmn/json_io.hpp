#pragma once

// JSON encodings shared by the library and the command-line tool.
//
//   weight:  {"lambda":[...],"theta":[...]}
//   pair:    [i,j]
//   matrix:  {"size":N,"entries":[[row,col,exponent],...]}  (row-major)

#include <nlohmann/json.hpp>

#include "glmn/classify.hpp"
#include "glmn/oracle.hpp"
#include "glmn/roots.hpp"
#include "glmn/serganova.hpp"
#include "glmn/weight.hpp"

namespace glmn {

[[nodiscard]] nlohmann::json weight_to_json(const Weight& w);

/// Throws ValidationError on a malformed object or a rank mismatch. Extra
/// keys are ignored.
[[nodiscard]] Weight weight_from_json(const nlohmann::json& j, const SuperRank& rank);

[[nodiscard]] nlohmann::json pairs_to_json(const std::vector<PairIndex>& pairs);
[[nodiscard]] std::vector<PairIndex> pairs_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json roots_to_json(const std::set<Root>& roots);
[[nodiscard]] nlohmann::json trace_to_json(const Trace& trace);
[[nodiscard]] nlohmann::json matrix_to_json(const OrbitMatrix& mat);
[[nodiscard]] nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace glmn
