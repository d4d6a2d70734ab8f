#include "snc/experiment.hpp"

#include <chrono>
#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "snc/bijumbled.hpp"
#include "snc/bounds.hpp"
#include "snc/exhaustive.hpp"
#include "snc/finders.hpp"
#include "snc/neighborhoods.hpp"
#include "snc/parallel.hpp"
#include "snc/typicality.hpp"

namespace snc {

namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::wheel, "E-WHEEL"},       {ExperimentKind::typical, "E-TYPICAL"},
    {ExperimentKind::snc_smallp, "E-SNC-SMALLP"}, {ExperimentKind::mindeg, "E-MINDEG"},
    {ExperimentKind::typorient, "E-TYPORIENT"}, {ExperimentKind::bijor, "E-BIJOR"},
    {ExperimentKind::chernoff, "E-CHERNOFF"}, {ExperimentKind::brute, "E-BRUTE"},
};

constexpr std::size_t kLabelledSweepCap = 6;
constexpr unsigned kTournamentShardBits = 8;

double parse_number(std::string_view text) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return value;
}

bool is_number_start(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '-';
}

std::optional<double> named_parameter(const ExperimentSpec& spec, std::string_view name) {
  if (name == "eps") return spec.eps;
  if (name == "alpha") return spec.alpha;
  if (name == "A") return spec.a_constant;
  if (name == "C") return spec.c_constant;
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "' in p-rule");
}

double rule_operand(const ExperimentSpec& spec, std::string_view token) {
  if (!token.empty() && is_number_start(token.front())) return parse_number(token);
  const auto value = named_parameter(spec, token);
  if (!value) throw std::invalid_argument("p-rule refers to '" + std::string(token) + "' which the spec omits");
  return *value;
}

double evaluate_rhs(const ExperimentSpec& spec, std::string_view rhs) {
  const auto op = rhs.find_first_of("*/");
  if (op == std::string_view::npos) return rule_operand(spec, rhs);
  const double left = rule_operand(spec, rhs.substr(0, op));
  const double right = rule_operand(spec, rhs.substr(op + 1));
  return rhs[op] == '*' ? left * right : left / right;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument("invalid spec: " + message);
}

std::string brute_mode(const ExperimentSpec& spec) { return spec.mode.value_or("graphs"); }

bool needs_density(ExperimentKind kind) { return kind != ExperimentKind::brute; }

void put(TrialOutcome& out, const std::string& key, double value) {
  if (std::isfinite(value)) out.metrics[key] = value;
}

std::shared_ptr<const Graph> trial_graph(const ExperimentSpec& spec, double p, Seed seed) {
  return std::make_shared<const Graph>(sample_gnp(GnpParams(spec.n, p), seed.derive(0, StreamTag::graph)));
}

void record_trace(TrialOutcome& out, const FinderTrace& trace) {
  out.success = trace.verdict.value_or(false);
  put(out, "regime_failure", trace.regime_failure ? 1 : 0);
  if (trace.w) put(out, "w", *trace.w);
  for (const auto& [name, set] : trace.sets) put(out, "|" + name + "|", static_cast<double>(set.size()));
  for (const auto& [name, held] : trace.regime) put(out, "regime." + name, held ? 1 : 0);
}

TrialOutcome trial_body(const ExperimentSpec& spec, std::size_t index, Seed seed) {
  TrialOutcome out;
  out.trial = index;
  out.seed = seed;
  const double p = needs_density(spec.kind) ? spec.resolve_p() : 0.0;

  switch (spec.kind) {
    case ExperimentKind::wheel: {
      const auto g = trial_graph(spec, p, seed);
      const bool wheel = contains_wheel(*g);
      out.success = !wheel;
      put(out, "wheel", wheel ? 1 : 0);
      put(out, "edges", static_cast<double>(g->edge_count()));
      break;
    }
    case ExperimentKind::typical: {
      const auto g = trial_graph(spec, p, seed);
      CheckOptions options;
      options.mode = parse_check_mode(spec.mode.value_or("sampled"));
      options.budget = spec.budget;
      options.seed = seed.derive(0, StreamTag::certifier);
      const auto report = check_typicality(*g, p, options);
      out.success = report.passes();
      for (const auto& item : report.items) {
        const std::string key = "item_" + std::string(to_string(item.item));
        put(out, key + ".refuted", item.refuted ? 1 : 0);
        put(out, key + ".margin", item.margin);
      }
      break;
    }
    case ExperimentKind::snc_smallp: {
      const auto g = trial_graph(spec, p, seed);
      const auto d = sample_uniform_orientation(g, seed.derive(0, StreamTag::orientation));
      record_trace(out, finder_typical(d, p, *spec.alpha));
      put(out, "seymour_vertex_exists", find_seymour_vertex(d) ? 1 : 0);
      break;
    }
    case ExperimentKind::mindeg: {
      const auto g = trial_graph(spec, p, seed);
      const std::size_t target = spec.min_outdegree.value_or(ceil_count(2.0 * std::sqrt(static_cast<double>(spec.n))));
      const auto d = orient_with_min_outdegree(g, target, seed.derive(0, StreamTag::orientation));
      put(out, "orientation_found", d ? 1 : 0);
      put(out, "target_min_outdegree", static_cast<double>(target));
      if (!d) break;
      put(out, "min_outdegree", static_cast<double>(d->min_out_degree()));
      record_trace(out, finder_min_outdegree(*d));
      break;
    }
    case ExperimentKind::typorient: {
      const auto g = trial_graph(spec, p, seed);
      const auto d = sample_uniform_orientation(g, seed.derive(0, StreamTag::orientation));
      const auto s = find_seymour_vertex(d);
      out.success = s.has_value();
      if (s) put(out, "seymour_vertex", *s);
      put(out, "length2_cover", length2_cover_check(d) ? 1 : 0);
      break;
    }
    case ExperimentKind::bijor: {
      const auto g = trial_graph(spec, p, seed);
      const auto params =
          BijumbledParams::from_constant(spec.n, p, spec.a_constant.value_or(default_jumbled_constant()));
      CheckOptions options;
      options.budget = spec.budget;
      options.seed = seed.derive(0, StreamTag::certifier);
      const auto verdict = certify_weak_bijumbled(*g, params, options);
      put(out, "not_refuted", verdict.refuted ? 0 : 1);
      put(out, "bijumbled_margin", verdict.margin);
      const auto d = sample_uniform_orientation(g, seed.derive(0, StreamTag::orientation));
      record_trace(out, finder_bijumbled(d, p, *spec.eps));
      break;
    }
    case ExperimentKind::chernoff: {
      auto rng = seed.derive(0, StreamTag::binomial_tail).engine();
      std::binomial_distribution<std::uint64_t> binom(spec.n, p);
      const double deviation = std::abs(static_cast<double>(binom(rng)) - static_cast<double>(spec.n) * p);
      const auto bound = chernoff_two_term(spec.n, p, *spec.x);
      const bool tail = deviation > bound.threshold;
      out.success = !tail;
      put(out, "tail", tail ? 1 : 0);
      put(out, "deviation", deviation);
      break;
    }
    case ExperimentKind::brute: {
      SearchOutcome o;
      if (brute_mode(spec) == "graphs") {
        o = brute_force_membership_in_S(labelled_graph(spec.n, index), 1, 0);
      } else {
        o = brute_force_shard(Graph::complete(spec.n), kTournamentShardBits, index);
      }
      out.success = o.all_have_seymour;
      put(out, "orientations_checked", static_cast<double>(o.orientations_checked));
      break;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames)
    if (name == text) return k;
  throw std::invalid_argument("unknown experiment kind '" + std::string(text) + "'");
}

PRule PRule::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  const auto eq = compact.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("p-rule needs '=': '" + std::string(text) + "'");
  const std::string lhs = compact.substr(0, eq);
  PRule rule;
  rule.p_exponent = 0;
  rule.rhs = compact.substr(eq + 1);
  if (rule.rhs.empty()) throw std::invalid_argument("p-rule has an empty right side");

  std::size_t i = 0;
  bool saw_p = false;
  while (i < lhs.size()) {
    if (lhs[i] == '*') {
      ++i;
      continue;
    }
    const char var = lhs[i++];
    if (var != 'n' && var != 'p') throw std::invalid_argument("p-rule left side may use only n and p: '" + lhs + "'");
    double exponent = 1;
    if (i < lhs.size() && lhs[i] == '^') {
      const std::size_t start = ++i;
      while (i < lhs.size() && is_number_start(lhs[i])) ++i;
      exponent = parse_number(std::string_view(lhs).substr(start, i - start));
    }
    if (var == 'n') {
      rule.n_exponent += exponent;
    } else {
      rule.p_exponent += exponent;
      saw_p = true;
    }
  }
  if (!saw_p || rule.p_exponent == 0) throw std::invalid_argument("p-rule must involve p: '" + lhs + "'");
  return rule;
}

std::string PRule::to_string() const {
  auto number = [](double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  return "n^" + number(n_exponent) + "p^" + number(p_exponent) + "=" + rhs;
}

double ExperimentSpec::resolve_p() const {
  require(p.has_value() != p_rule.has_value(), "give exactly one of p and p_rule");
  double value = 0;
  if (p) {
    value = *p;
  } else {
    const PRule rule = PRule::parse(*p_rule);
    const double rhs = evaluate_rhs(*this, rule.rhs);
    require(rhs > 0, "p-rule right side must be positive");
    value = std::pow(rhs / std::pow(static_cast<double>(n), rule.n_exponent), 1.0 / rule.p_exponent);
  }
  require(value > 0.0 && value < 1.0, "p must resolve into (0,1), got " + std::to_string(value));
  return value;
}

std::size_t ExperimentSpec::effective_trials() const {
  if (kind != ExperimentKind::brute) return trials;
  const std::size_t pairs = n * (n - 1) / 2;
  if (brute_mode(*this) == "graphs") return std::size_t{1} << pairs;
  return std::size_t{1} << std::min<std::size_t>(kTournamentShardBits, pairs);
}

void ExperimentSpec::validate() const {
  require(n >= 1, "n must be at least 1");
  if (kind != ExperimentKind::chernoff) require(n <= kMaxVertices, "n exceeds " + std::to_string(kMaxVertices));
  if (kind != ExperimentKind::brute) require(trials >= 1, "trials must be at least 1");
  if (needs_density(kind)) resolve_p();
  switch (kind) {
    case ExperimentKind::wheel:
    case ExperimentKind::typorient:
      break;
    case ExperimentKind::typical: {
      const auto m = mode.value_or("sampled");
      require(m == "sampled" || m == "exact", "mode must be sampled or exact");
      require(m == "sampled" || n <= kTypicalityExactCap, "exact typicality needs n <= 20");
      require(budget >= 1, "budget must be at least 1");
      break;
    }
    case ExperimentKind::snc_smallp:
      require(alpha && *alpha > 0 && *alpha < 0.25, "alpha must lie in (0, 1/4)");
      break;
    case ExperimentKind::mindeg:
      break;
    case ExperimentKind::bijor:
      require(eps && *eps > 0 && *eps < 1, "eps must lie in (0,1)");
      require(!a_constant || *a_constant > 0, "A must be positive");
      require(budget >= 1, "budget must be at least 1");
      break;
    case ExperimentKind::chernoff:
      require(x && *x > 0, "x must be positive");
      break;
    case ExperimentKind::brute: {
      const auto m = brute_mode(*this);
      require(m == "graphs" || m == "tournaments", "mode must be graphs or tournaments");
      if (m == "graphs")
        require(n <= kLabelledSweepCap, "labelled graph sweep needs n <= " + std::to_string(kLabelledSweepCap));
      else
        require(n <= kTournamentOrderCap, "tournament sweep needs n <= " + std::to_string(kTournamentOrderCap));
      break;
    }
  }
}

bool ExperimentResult::same_outcomes(const ExperimentResult& other) const {
  ExperimentResult a = *this;
  a.wall_time_seconds = other.wall_time_seconds;
  return a == other;
}

Seed trial_seed(const ExperimentSpec& spec, std::size_t index) { return spec.seed.derive(index, StreamTag::trial); }

TrialOutcome run_trial(const ExperimentSpec& spec, std::size_t index, Seed seed) {
  spec.validate();
  return trial_body(spec, index, seed);
}

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned workers) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();

  ExperimentResult result;
  result.spec = spec;
  result.p = needs_density(spec.kind) ? spec.resolve_p() : 0.0;
  result.trials = spec.effective_trials();
  result.outcomes.resize(result.trials);
  parallel_for(result.trials, workers, [&](std::size_t i) {
    result.outcomes[i] = trial_body(spec, i, trial_seed(spec, i));
  });

  for (const auto& o : result.outcomes) {
    if (o.success)
      ++result.successes;
    else
      result.failures.push_back({o.trial, o.seed});
    for (const auto& [key, value] : o.metrics) result.metric_totals[key] += value;
  }
  result.frequency = static_cast<double>(result.successes) / static_cast<double>(result.trials);
  result.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace snc
