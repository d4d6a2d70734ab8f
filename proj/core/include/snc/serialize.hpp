#pragma once

#include <nlohmann/json.hpp>

#include "snc/bijumbled.hpp"
#include "snc/exhaustive.hpp"
#include "snc/finders.hpp"
#include "snc/typicality.hpp"

namespace snc {

inline constexpr int kReportSchemaVersion = 1;

/// {schema, schema_version, n, p, seed, stream_tag, budget, items: [{item, mode,
/// verdict, witness?, margin, instances_checked}]}. Infinite margins become null.
nlohmann::json typicality_report_json(const TypicalityReport& report);

/// {schema, schema_version, item: "weak_bijumbled", mode, verdict, witness?, margin,
/// p, alpha, A?, seed, stream_tag, budget, pairs_checked}
nlohmann::json bijumbled_report_json(const BijumbledVerdict& verdict, const BijumbledParams& params,
                                     const CheckOptions& options);

/// {schema, schema_version, finder, w?, verdict?, regime_failure, sets, scalars, regime}
nlohmann::json finder_trace_json(const FinderTrace& trace);

/// {schema, schema_version, all_have_seymour, orientations_checked, counterexample?: {n, arcs}}
nlohmann::json search_outcome_json(const SearchOutcome& outcome);

}  // namespace snc
