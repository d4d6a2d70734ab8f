#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "snc/random_models.hpp"

namespace snc {

enum class ExperimentKind { wheel, typical, snc_smallp, mindeg, typorient, bijor, chernoff, brute };

/// "E-WHEEL", "E-TYPICAL", ...
std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment_kind(std::string_view text);

/// n^a p^b = rhs, solved for p. The right side is a number, a parameter name
/// (eps, alpha, A, C) or a name scaled by a number ("eps/32", "2*C").
struct PRule {
  double n_exponent = 0;
  double p_exponent = 1;
  std::string rhs;

  static PRule parse(std::string_view text);
  std::string to_string() const;
};

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::typical;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::string> p_rule;
  std::optional<double> eps;
  std::optional<double> alpha;
  std::optional<double> a_constant;  // "A"
  std::optional<double> c_constant;  // "C"
  std::optional<double> x;           // E-CHERNOFF deviation parameter
  std::optional<std::size_t> min_outdegree;  // E-MINDEG target; default ceil(2 sqrt(n))
  /// E-TYPICAL: "sampled" | "exact". E-BRUTE: "graphs" | "tournaments".
  std::optional<std::string> mode;
  std::size_t trials = 1;
  Seed seed{};
  std::size_t budget = 10000;

  /// p itself, or the p-rule solved at this n. Throws std::invalid_argument.
  double resolve_p() const;
  /// Trial count actually run (E-BRUTE derives it from n and mode).
  std::size_t effective_trials() const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

struct TrialOutcome {
  std::size_t trial = 0;
  Seed seed{};
  bool success = false;
  std::map<std::string, double> metrics;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

struct TrialFailure {
  std::size_t trial = 0;
  Seed seed{};
  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

inline constexpr int kResultSchemaVersion = 1;

struct ExperimentResult {
  int schema_version = kResultSchemaVersion;
  ExperimentSpec spec;
  double p = 0;  // resolved density (0 when the kind has none)
  std::size_t trials = 0;
  std::size_t successes = 0;
  double frequency = 0;  // successes / trials
  /// Per-metric sums over trials, e.g. the number of trials with length2_cover = 1.
  std::map<std::string, double> metric_totals;
  double wall_time_seconds = 0;
  std::vector<TrialFailure> failures;
  std::vector<TrialOutcome> outcomes;

  /// Equality ignoring wall time.
  bool same_outcomes(const ExperimentResult& other) const;
  friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

/// Seed used by trial `index` of a spec.
Seed trial_seed(const ExperimentSpec& spec, std::size_t index);

/// Runs a single trial with an explicit seed (replays a recorded failure).
TrialOutcome run_trial(const ExperimentSpec& spec, std::size_t index, Seed seed);

/// Runs all trials on `workers` threads. Outcomes do not depend on the worker count.
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned workers = 1);

void to_json(nlohmann::json& j, const ExperimentSpec& spec);
void from_json(const nlohmann::json& j, ExperimentSpec& spec);
void to_json(nlohmann::json& j, const ExperimentResult& result);
void from_json(const nlohmann::json& j, ExperimentResult& result);

ExperimentSpec load_spec(const std::filesystem::path& path);
ExperimentResult load_result(const std::filesystem::path& path);

enum class ReportFormat { json, csv };
ReportFormat parse_report_format(std::string_view text);

void emit_report(const ExperimentResult& result, ReportFormat format, std::ostream& out);
/// Throws std::runtime_error with the path on I/O failure.
void emit_report(const ExperimentResult& result, ReportFormat format, const std::filesystem::path& path);

}  // namespace snc
