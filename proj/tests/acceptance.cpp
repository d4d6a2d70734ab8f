// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Run with SNC_LAB_WORKERS to control parallelism; results do not depend on it.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "snc/bijumbled.hpp"
#include "snc/bounds.hpp"
#include "snc/exhaustive.hpp"
#include "snc/experiment.hpp"
#include "snc/neighborhoods.hpp"
#include "snc/parallel.hpp"
#include "snc/typicality.hpp"

namespace {

using namespace snc;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

unsigned workers() { return default_worker_count(); }

Verdict ac1() {
  const auto start = Clock::now();
  const auto r = sweep_labelled_graphs(5, 1);
  const double t = seconds_since(start);
  const bool ok = r.graphs == 1024 && r.graphs_in_class == 1024 && !r.counterexample && t < 300;
  return {ok, fmt("%llu/1024 graphs in S, %llu orientations, %.2fs single-worker (limit 300s)",
                  static_cast<unsigned long long>(r.graphs_in_class),
                  static_cast<unsigned long long>(r.orientations_checked), t)};
}

Verdict ac2() {
  const auto start = Clock::now();
  const auto r = sweep_tournaments(7, workers());
  const double t = seconds_since(start);
  const bool ok = r.all_have_seymour && r.orientations_checked == (1u << 21) && t < 600;
  return {ok, fmt("%llu tournaments on 7 vertices, all_have_seymour=%d, %.2fs (limit 600s)",
                  static_cast<unsigned long long>(r.orientations_checked), r.all_have_seymour ? 1 : 0, t)};
}

Verdict ac3() {
  ExperimentSpec s;
  s.kind = ExperimentKind::wheel;
  s.n = 200;
  s.eps = 0.1;
  s.p_rule = "n^4 p^6 = eps/32";
  s.trials = 1000;
  s.seed = Seed(3);
  const auto r = run_experiment(s, workers());
  const auto wheels = r.trials - r.successes;
  const double freq = static_cast<double>(wheels) / static_cast<double>(r.trials);
  return {freq <= 0.1, fmt("p=%.6f, %zu/%zu graphs contain a wheel, frequency %.4f (limit 0.1)", r.p, wheels,
                           r.trials, freq)};
}

Verdict ac4() {
  ExperimentSpec s;
  s.kind = ExperimentKind::typical;
  s.n = 2000;
  s.p = 0.2;
  s.mode = "sampled";
  s.budget = 10000;
  s.trials = 100;
  s.seed = Seed(4);
  const auto r = run_experiment(s, workers());
  return {r.successes >= 99, fmt("%zu/%zu seeds pass all four items (need >= 99)", r.successes, r.trials)};
}

Verdict ac5() {
  bool ok = true;
  std::string detail;
  for (const double p : {0.3, 0.6}) {
    ExperimentSpec s;
    s.kind = ExperimentKind::typorient;
    s.n = 300;
    s.p = p;
    s.trials = 200;
    s.seed = Seed(p == 0.3 ? 53 : 56);
    const auto r = run_experiment(s, workers());
    const auto covers = static_cast<std::size_t>(r.metric_totals.at("length2_cover"));
    ok = ok && r.successes == r.trials;
    detail += fmt("p=%.1f: Seymour vertex %zu/%zu", p, r.successes, r.trials);
    if (p == 0.3) {
      ok = ok && covers * 100 >= 95 * r.trials;
      detail += fmt(", length2_cover %zu/%zu (need >= 95%%); ", covers, r.trials);
    }
  }
  return {ok, detail};
}

Verdict ac6() {
  ExperimentSpec s;
  s.kind = ExperimentKind::mindeg;
  s.n = 400;
  s.p = 0.5;
  s.min_outdegree = 40;
  s.trials = 100;
  s.seed = Seed(6);
  const auto r = run_experiment(s, workers());
  const auto found = static_cast<std::size_t>(r.metric_totals.at("orientation_found"));
  return {r.successes == 100 && found == 100,
          fmt("orientations with min out-degree >= 40: %zu/100, finder verdict true %zu/100", found, r.successes)};
}

Verdict ac7() {
  ExperimentSpec s;
  s.kind = ExperimentKind::bijor;
  s.n = 2000;
  s.p = 0.5;
  s.eps = 0.01;
  s.budget = 100000;
  s.trials = 100;
  s.seed = Seed(7);
  const auto r = run_experiment(s, workers());
  const auto not_refuted = static_cast<std::size_t>(r.metric_totals.at("not_refuted"));
  return {r.successes >= 99 && not_refuted >= 99,
          fmt("finder_bijumbled verdict true %zu/100, A=e^2 sqrt(6) not refuted %zu/100 (need >= 99 each)",
              r.successes, not_refuted)};
}

Verdict ac8() {
  bool ok = true;
  std::string worst;
  double worst_ratio = -1;
  std::uint64_t cell = 0;
  for (const std::uint64_t n : {1000ULL, 10000ULL})
    for (const double p : {0.1, 0.3, 0.5})
      for (const double x : {1.0, 2.0, 4.0}) {
        const double freq = monte_carlo_tail(n, p, x, 100000, Seed(8).derive(cell++, StreamTag::binomial_tail));
        const double bound = 2 * std::exp(-3 * x);
        ok = ok && freq <= bound;
        if (freq / bound > worst_ratio) {
          worst_ratio = freq / bound;
          worst = fmt("N=%llu p=%.1f x=%.0f freq=%.5f bound=%.5f", static_cast<unsigned long long>(n), p, x, freq,
                      bound);
        }
      }
  return {ok, "18 cells x 1e5 draws; tightest cell " + worst};
}

std::set<Vertex> as_set(const VertexSet& s) {
  const auto v = s.to_vector();
  return {v.begin(), v.end()};
}

Verdict ac9() {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      oracle::for_each_orientation(oracle::graph_from_mask(n, mask), [&](const Orientation& d) {
        for (Vertex u = 0; u < n; ++u) {
          ++checked;
          if (as_set(second_neighborhood(d, u)) != oracle::at_distance(d, u, 2)) ++mismatches;
        }
      });

  std::mt19937_64 rng(9);
  std::size_t contradictions = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 6 + rng() % 7;
    const double density = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
    const double p = 0.2 + 0.79 * static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = sample_gnp(GnpParams(n, density), Seed(rng()));
    CheckOptions exact;
    exact.mode = CheckMode::exact;
    CheckOptions sampled;
    sampled.budget = 1000;
    sampled.seed = Seed(rng());

    const auto te = check_typicality(g, p, exact);
    const auto ts = check_typicality(g, p, sampled);
    for (std::size_t k = 0; k < 4; ++k)
      if (ts.items[k].refuted && !te.items[k].refuted) ++contradictions;

    const auto params = BijumbledParams(p, 0.2 + 2.0 * static_cast<double>(rng() % 1000) / 1000.0);
    const auto be = certify_weak_bijumbled(g, params, exact);
    const auto bs = certify_weak_bijumbled(g, params, sampled);
    if (bs.refuted && !be.refuted) ++contradictions;
  }
  return {mismatches == 0 && contradictions == 0,
          fmt("%llu (orientation, vertex) pairs, %llu N2 mismatches; 50 graphs, %zu sampled/exact contradictions",
              static_cast<unsigned long long>(checked), static_cast<unsigned long long>(mismatches), contradictions)};
}

std::string report(const ExperimentResult& r, ReportFormat f) {
  std::ostringstream out;
  emit_report(r, f, out);
  if (f == ReportFormat::csv) return out.str();
  auto j = nlohmann::json::parse(out.str());
  j.erase("wall_time_seconds");
  return j.dump();
}

Verdict ac10() {
  std::vector<ExperimentSpec> specs;
  specs.reserve(8);
  auto add = [&](ExperimentKind kind, std::size_t n, double p, std::size_t trials) {
    ExperimentSpec s;
    s.kind = kind;
    s.n = n;
    s.p = p;
    s.trials = trials;
    s.seed = Seed(1000 + specs.size());
    specs.push_back(s);
    return &specs.back();
  };
  add(ExperimentKind::typorient, 120, 0.3, 40);
  add(ExperimentKind::wheel, 60, 0.05, 100);
  add(ExperimentKind::typical, 200, 0.2, 10)->budget = 500;
  add(ExperimentKind::mindeg, 100, 0.4, 20);
  add(ExperimentKind::snc_smallp, 300, 0.1, 20)->alpha = 0.1;
  auto* bij = add(ExperimentKind::bijor, 200, 0.5, 10);
  bij->eps = 0.01;
  bij->budget = 500;
  add(ExperimentKind::chernoff, 1000, 0.3, 1000)->x = 0.5;
  auto* brute = add(ExperimentKind::brute, 5, 0.5, 1);
  brute->p.reset();
  brute->mode = "tournaments";

  std::size_t identical = 0;
  std::size_t replays_ok = 0;
  std::size_t replays = 0;
  for (const auto& s : specs) {
    const auto serial = run_experiment(s, 1);
    const auto again = run_experiment(s, 1);
    const auto parallel = run_experiment(s, std::max(2u, workers()));
    bool same = serial.same_outcomes(again) && serial.same_outcomes(parallel);
    for (const auto f : {ReportFormat::json, ReportFormat::csv})
      same = same && report(serial, f) == report(again, f) && report(serial, f) == report(parallel, f);
    identical += same;
    for (const auto& failure : serial.failures) {
      ++replays;
      replays_ok += run_trial(s, failure.trial, failure.seed) == serial.outcomes[failure.trial];
    }
  }
  return {identical == specs.size() && replays_ok == replays,
          fmt("%zu/%zu experiment kinds byte-identical across serial, repeat and parallel runs; %zu/%zu failures replay",
              identical, specs.size(), replays_ok, replays)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},  {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s  %s  [%.1fs]\n", name, v.pass ? "PASS" : "FAIL", v.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
