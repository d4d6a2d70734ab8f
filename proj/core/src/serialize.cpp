#include "snc/serialize.hpp"

#include <cmath>

namespace snc {

namespace {

nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

nlohmann::json header(std::string_view schema) {
  return {{"schema", schema}, {"schema_version", kReportSchemaVersion}};
}

}  // namespace

nlohmann::json typicality_report_json(const TypicalityReport& report) {
  auto j = header("snc-lab/typicality-report");
  j["n"] = report.n;
  j["p"] = report.p;
  j["mode"] = to_string(report.mode);
  j["seed"] = format_seed(report.seed);
  j["stream_tag"] = to_string(StreamTag::subsets);
  j["budget"] = report.budget;
  j["verdict"] = report.passes() ? "pass" : "refuted";
  auto& items = j["items"] = nlohmann::json::array();
  for (const auto& v : report.items) {
    nlohmann::json item = {{"item", to_string(v.item)},
                           {"mode", to_string(v.mode)},
                           {"verdict", v.refuted ? "refuted" : "pass"},
                           {"margin", finite_or_null(v.margin)},
                           {"instances_checked", v.instances_checked}};
    if (v.witness) {
      nlohmann::json w = {{"x", v.witness->x},
                          {"observed", v.witness->observed},
                          {"expected", v.witness->expected},
                          {"bound", v.witness->bound}};
      if (v.item == TypicalityItem::pair_edges) {
        w["y"] = v.witness->y;
        w["n_double_prime"] = v.witness->n_double_prime;
      }
      item["witness"] = std::move(w);
    }
    items.push_back(std::move(item));
  }
  return j;
}

nlohmann::json bijumbled_report_json(const BijumbledVerdict& verdict, const BijumbledParams& params,
                                     const CheckOptions& options) {
  auto j = header("snc-lab/bijumbled-report");
  j["item"] = "weak_bijumbled";
  j["mode"] = to_string(verdict.mode);
  j["verdict"] = verdict.refuted ? "refuted" : "pass";
  j["margin"] = finite_or_null(verdict.margin);
  j["p"] = params.p();
  j["alpha"] = params.alpha();
  if (params.constant() > 0) j["A"] = params.constant();
  j["seed"] = format_seed(options.seed);
  j["stream_tag"] = to_string(StreamTag::subsets);
  j["budget"] = options.budget;
  j["pairs_checked"] = verdict.pairs_checked;
  if (verdict.refuted)
    j["witness"] = {{"u", verdict.u},
                    {"w", verdict.w},
                    {"edges_between", verdict.edges_between},
                    {"deviation", verdict.deviation},
                    {"bound", verdict.bound}};
  return j;
}

nlohmann::json finder_trace_json(const FinderTrace& trace) {
  auto j = header("snc-lab/finder-trace");
  j["finder"] = to_string(trace.kind);
  j["regime_failure"] = trace.regime_failure;
  if (trace.w) j["w"] = *trace.w;
  if (trace.verdict) j["verdict"] = *trace.verdict;
  auto& sets = j["sets"] = nlohmann::json::object();
  for (const auto& [name, set] : trace.sets) sets[name] = set.to_vector();
  auto& scalars = j["scalars"] = nlohmann::json::object();
  for (const auto& [name, value] : trace.scalars) scalars[name] = finite_or_null(value);
  j["regime"] = trace.regime;
  return j;
}

nlohmann::json search_outcome_json(const SearchOutcome& outcome) {
  auto j = header("snc-lab/search-outcome");
  j["all_have_seymour"] = outcome.all_have_seymour;
  j["orientations_checked"] = outcome.orientations_checked;
  if (outcome.counterexample) {
    auto arcs = nlohmann::json::array();
    for (const auto& [u, v] : outcome.counterexample->arcs()) arcs.push_back({u, v});
    j["counterexample"] = {{"n", outcome.counterexample->order()}, {"arcs", std::move(arcs)}};
  }
  return j;
}

}  // namespace snc
