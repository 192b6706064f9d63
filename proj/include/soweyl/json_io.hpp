#pragma once

#include "soweyl/critical.hpp"
#include "soweyl/lemma.hpp"
#include "soweyl/parabolic.hpp"
#include "soweyl/types.hpp"
#include "soweyl/weyl.hpp"

#include <nlohmann/json.hpp>

namespace soweyl {

using Json = nlohmann::ordered_json;

// Weights and roots serialize as plain integer arrays.
Json weight_to_json(const Vec& v);
Vec weight_from_json(const Json& j);

// {"perm": [...], "signs": [...]} with 1-based perm entries.
Json to_json(const WeylElement& w);
WeylElement weyl_element_from_json(const Json& j);

// {"ambient_rank", "deleted", "count", "reps": [{"perm", "signs", "length"}]}
Json to_json(const KostantRepSet& set);

// {"n", "mu", "critical_set"}
Json critical_report_json(const SOWeightData& w);

// {"k", "l", "critical_set"}
Json rankin_selberg_report_json(Int k, Int l);

// {"instance": {"n", "mu", "d"}, "cond1", "cond2", "cond3", "witnesses", "equivalent"}
Json to_json(const LemmaReport& report);

// {"instances", "agreements", "counterexamples", "ratio_coverage_ok",
//  "uniqueness_ok", "runtime_ms", ...}
Json to_json(const SweepReport& report);

}  // namespace soweyl
