#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "snc/experiment.hpp"

namespace snc {
namespace {

ExperimentSpec wheel_spec() {
  ExperimentSpec s;
  s.kind = ExperimentKind::wheel;
  s.n = 200;
  s.p_rule = "n^4p^6 = eps/32";
  s.eps = 0.1;
  s.trials = 40;
  s.seed = Seed(2024);
  return s;
}

std::string report_text(const ExperimentResult& r, ReportFormat f) {
  std::ostringstream out;
  emit_report(r, f, out);
  return out.str();
}

TEST(PRule, Parsing) {
  const auto r = PRule::parse("n^4 p^6 = eps/32");
  EXPECT_EQ(r.n_exponent, 4.0);
  EXPECT_EQ(r.p_exponent, 6.0);
  EXPECT_EQ(r.rhs, "eps/32");
  const auto q = PRule::parse("n*p=2");
  EXPECT_EQ(q.n_exponent, 1.0);
  EXPECT_EQ(q.p_exponent, 1.0);
  EXPECT_THROW(PRule::parse("n^2 = 3"), std::invalid_argument);
  EXPECT_THROW(PRule::parse("n p"), std::invalid_argument);
  EXPECT_THROW(PRule::parse("n q = 1"), std::invalid_argument);
}

TEST(PRule, WheelRegimeResolves) {
  const auto s = wheel_spec();
  const double expected = std::pow(0.1 / (32 * std::pow(200.0, 4)), 1.0 / 6);
  EXPECT_NEAR(s.resolve_p(), expected, 1e-15);
  EXPECT_NEAR(s.resolve_p(), 0.01119, 1e-5);

  ExperimentSpec c = s;
  c.p_rule = "n p = 2*C";
  c.c_constant = 3.0;
  EXPECT_NEAR(c.resolve_p(), 0.03, 1e-15);
  c.p_rule = "p = 1.5";
  EXPECT_THROW(c.resolve_p(), std::invalid_argument);
  c.p_rule = "p = beta";
  EXPECT_THROW(c.resolve_p(), std::invalid_argument);
}

TEST(ExperimentSpec, ValidationNamesTheField) {
  auto s = wheel_spec();
  s.p = 0.1;  // both p and p_rule
  EXPECT_THROW(s.validate(), std::invalid_argument);

  ExperimentSpec t;
  t.kind = ExperimentKind::snc_smallp;
  t.n = 50;
  t.p = 0.1;
  t.alpha = 0.3;
  try {
    t.validate();
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
  }

  ExperimentSpec ex;
  ex.kind = ExperimentKind::typical;
  ex.n = 21;
  ex.p = 0.5;
  ex.mode = "exact";
  EXPECT_THROW(ex.validate(), std::invalid_argument);

  ExperimentSpec b;
  b.kind = ExperimentKind::brute;
  b.n = 7;
  b.mode = "graphs";
  EXPECT_THROW(b.validate(), std::invalid_argument);
  b.mode = "tournaments";
  b.n = 9;
  EXPECT_THROW(b.validate(), std::invalid_argument);

  ExperimentSpec c;
  c.kind = ExperimentKind::chernoff;
  c.n = 100;
  c.p = 0.3;
  EXPECT_THROW(c.validate(), std::invalid_argument);  // x missing
}

TEST(ExperimentKind, NamesRoundTrip) {
  for (auto k : {ExperimentKind::wheel, ExperimentKind::typical, ExperimentKind::snc_smallp, ExperimentKind::mindeg,
                 ExperimentKind::typorient, ExperimentKind::bijor, ExperimentKind::chernoff, ExperimentKind::brute})
    EXPECT_EQ(parse_experiment_kind(to_string(k)), k);
  EXPECT_EQ(to_string(ExperimentKind::snc_smallp), "E-SNC-SMALLP");
  EXPECT_THROW(parse_experiment_kind("E-NOPE"), std::invalid_argument);
}

TEST(Experiment, ParallelRunMatchesSerial) {
  const auto s = wheel_spec();
  const auto a = run_experiment(s, 1);
  const auto b = run_experiment(s, 4);
  EXPECT_TRUE(a.same_outcomes(b));
  EXPECT_EQ(report_text(a, ReportFormat::csv), report_text(b, ReportFormat::csv));
  EXPECT_EQ(a.trials, 40u);
  EXPECT_EQ(a.outcomes.size(), 40u);
}

TEST(Experiment, JsonReportsIdenticalApartFromWallTime) {
  const auto s = wheel_spec();
  auto a = nlohmann::json::parse(report_text(run_experiment(s, 1), ReportFormat::json));
  auto b = nlohmann::json::parse(report_text(run_experiment(s, 2), ReportFormat::json));
  a.erase("wall_time_seconds");
  b.erase("wall_time_seconds");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Experiment, JsonRoundTrip) {
  ExperimentSpec s;
  s.kind = ExperimentKind::typorient;
  s.n = 40;
  s.p = 0.3;
  s.trials = 5;
  s.seed = Seed(0xabcdef0123456789ULL);
  const auto r = run_experiment(s);
  const nlohmann::json j = r;
  const auto back = j.get<ExperimentResult>();
  EXPECT_EQ(back, r);
  EXPECT_EQ(nlohmann::json(s).get<ExperimentSpec>(), s);

  nlohmann::json bad = nlohmann::json(s);
  bad["unknown_field"] = 1;
  EXPECT_ANY_THROW((void)bad.get<ExperimentSpec>());
}

TEST(Experiment, CsvHasOneRowPerTrial) {
  auto s = wheel_spec();
  s.trials = 7;
  const auto text = report_text(run_experiment(s), ReportFormat::csv);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 8u);
  EXPECT_EQ(text.rfind("trial,seed,success,", 0), 0u);
}

TEST(Experiment, FailingTrialReplays) {
  ExperimentSpec s;
  s.kind = ExperimentKind::chernoff;
  s.n = 400;
  s.p = 0.5;
  s.x = 0.05;  // loose enough that tails are common
  s.trials = 200;
  s.seed = Seed(5);
  const auto r = run_experiment(s);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.size(), r.trials - r.successes);
  for (const auto& f : r.failures) {
    EXPECT_EQ(f.seed, trial_seed(s, f.trial));
    const auto replay = run_trial(s, f.trial, f.seed);
    EXPECT_EQ(replay, r.outcomes[f.trial]);
    EXPECT_FALSE(replay.success);
  }
}

TEST(Experiment, BruteGraphsOnFiveVertices) {
  ExperimentSpec s;
  s.kind = ExperimentKind::brute;
  s.n = 5;
  s.mode = "graphs";
  EXPECT_EQ(s.effective_trials(), 1024u);
  const auto r = run_experiment(s, 2);
  EXPECT_EQ(r.trials, 1024u);
  EXPECT_EQ(r.successes, 1024u);
  EXPECT_EQ(r.metric_totals.at("orientations_checked"), 59049.0);
}

TEST(Experiment, BruteTournamentShards) {
  ExperimentSpec s;
  s.kind = ExperimentKind::brute;
  s.n = 5;
  s.mode = "tournaments";
  const auto r = run_experiment(s);
  EXPECT_EQ(r.trials, 256u);
  EXPECT_EQ(r.successes, 256u);
  EXPECT_EQ(r.metric_totals.at("orientations_checked"), 1024.0);
}

TEST(Experiment, ChernoffFrequencyUnderBound) {
  ExperimentSpec s;
  s.kind = ExperimentKind::chernoff;
  s.n = 400;
  s.p = 0.5;
  s.x = 1.0;
  s.trials = 5000;
  s.seed = Seed(11);
  const auto r = run_experiment(s);
  EXPECT_LE(1.0 - r.frequency, 2 * std::exp(-3.0));
}

TEST(Experiment, FinderKindsRecordTraces) {
  ExperimentSpec s;
  s.kind = ExperimentKind::mindeg;
  s.n = 100;
  s.p = 0.3;
  s.min_outdegree = 10;
  s.trials = 3;
  const auto r = run_experiment(s);
  EXPECT_EQ(r.successes, 3u);
  for (const auto& o : r.outcomes) {
    EXPECT_EQ(o.metrics.at("orientation_found"), 1.0);
    EXPECT_GE(o.metrics.at("min_outdegree"), 10.0);
    EXPECT_TRUE(o.metrics.contains("regime.locally_cornering"));
  }
}

TEST(Experiment, ReportFormatParsing) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::json);
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

TEST(Experiment, IoErrorsNameThePath) {
  try {
    (void)load_spec("/nonexistent/spec.json");
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/spec.json"), std::string::npos);
  }
}

}  // namespace
}  // namespace snc
