#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "snc/experiment.hpp"

namespace snc {

namespace {

constexpr std::string_view kSchemaName = "snc-lab/experiment-result";

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& value) {
  if (auto it = j.find(key); it != j.end() && !it->is_null())
    value = it->get<T>();
  else
    value.reset();
}

Seed seed_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_seed(j.get<std::string>());
  if (j.is_number_unsigned()) return Seed(j.get<std::uint64_t>());
  throw std::invalid_argument("seed must be a string or a non-negative integer");
}

std::string csv_number(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void to_json(nlohmann::json& j, const ExperimentSpec& spec) {
  j = nlohmann::json::object();
  j["kind"] = std::string(to_string(spec.kind));
  j["n"] = spec.n;
  put_optional(j, "p", spec.p);
  put_optional(j, "p_rule", spec.p_rule);
  put_optional(j, "eps", spec.eps);
  put_optional(j, "alpha", spec.alpha);
  put_optional(j, "A", spec.a_constant);
  put_optional(j, "C", spec.c_constant);
  put_optional(j, "x", spec.x);
  put_optional(j, "min_outdegree", spec.min_outdegree);
  put_optional(j, "mode", spec.mode);
  j["trials"] = spec.trials;
  j["seed"] = format_seed(spec.seed);
  j["budget"] = spec.budget;
}

void from_json(const nlohmann::json& j, ExperimentSpec& spec) {
  if (!j.is_object()) throw std::invalid_argument("experiment spec must be a JSON object");
  static const std::set<std::string> known = {"kind", "n",     "p",     "p_rule",        "eps",  "alpha",  "A",
                                              "C",    "x",     "min_outdegree", "mode", "trials", "seed", "budget"};
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw std::invalid_argument("unknown spec field '" + key + "'");
  spec = ExperimentSpec{};
  spec.kind = parse_experiment_kind(j.at("kind").get<std::string>());
  spec.n = j.at("n").get<std::size_t>();
  get_optional(j, "p", spec.p);
  get_optional(j, "p_rule", spec.p_rule);
  get_optional(j, "eps", spec.eps);
  get_optional(j, "alpha", spec.alpha);
  get_optional(j, "A", spec.a_constant);
  get_optional(j, "C", spec.c_constant);
  get_optional(j, "x", spec.x);
  get_optional(j, "min_outdegree", spec.min_outdegree);
  get_optional(j, "mode", spec.mode);
  spec.trials = j.value("trials", std::size_t{1});
  if (auto it = j.find("seed"); it != j.end()) spec.seed = seed_from_json(*it);
  spec.budget = j.value("budget", std::size_t{10000});
}

void to_json(nlohmann::json& j, const ExperimentResult& r) {
  j = nlohmann::json::object();
  j["schema"] = kSchemaName;
  j["schema_version"] = r.schema_version;
  j["spec"] = r.spec;
  j["p"] = r.p;
  j["stream_tag"] = to_string(StreamTag::trial);
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["frequency"] = r.frequency;
  j["metric_totals"] = r.metric_totals;
  j["wall_time_seconds"] = r.wall_time_seconds;
  auto& failures = j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"trial", f.trial}, {"seed", format_seed(f.seed)}});
  auto& outcomes = j["outcomes"] = nlohmann::json::array();
  for (const auto& o : r.outcomes)
    outcomes.push_back(
        {{"trial", o.trial}, {"seed", format_seed(o.seed)}, {"success", o.success}, {"metrics", o.metrics}});
}

void from_json(const nlohmann::json& j, ExperimentResult& r) {
  if (j.value("schema", std::string{}) != kSchemaName)
    throw std::invalid_argument("not an experiment result (schema field missing or wrong)");
  r = ExperimentResult{};
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kResultSchemaVersion)
    throw std::invalid_argument("unsupported result schema version " + std::to_string(r.schema_version));
  r.spec = j.at("spec").get<ExperimentSpec>();
  r.p = j.at("p").get<double>();
  r.trials = j.at("trials").get<std::size_t>();
  r.successes = j.at("successes").get<std::size_t>();
  r.frequency = j.at("frequency").get<double>();
  r.metric_totals = j.at("metric_totals").get<std::map<std::string, double>>();
  r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  for (const auto& f : j.at("failures")) r.failures.push_back({f.at("trial").get<std::size_t>(), seed_from_json(f.at("seed"))});
  for (const auto& o : j.at("outcomes")) {
    TrialOutcome t;
    t.trial = o.at("trial").get<std::size_t>();
    t.seed = seed_from_json(o.at("seed"));
    t.success = o.at("success").get<bool>();
    t.metrics = o.at("metrics").get<std::map<std::string, double>>();
    r.outcomes.push_back(std::move(t));
  }
}

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace

ExperimentSpec load_spec(const std::filesystem::path& path) {
  try {
    auto spec = read_json(path).get<ExperimentSpec>();
    spec.validate();
    return spec;
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

ExperimentResult load_result(const std::filesystem::path& path) {
  try {
    return read_json(path).get<ExperimentResult>();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "' (expected json or csv)");
}

void emit_report(const ExperimentResult& result, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::json) {
    out << nlohmann::json(result).dump(2) << '\n';
    return;
  }
  std::set<std::string> columns;
  for (const auto& o : result.outcomes)
    for (const auto& [key, value] : o.metrics) columns.insert(key);
  out << "trial,seed,success";
  for (const auto& c : columns) out << ',' << c;
  out << '\n';
  for (const auto& o : result.outcomes) {
    out << o.trial << ',' << format_seed(o.seed) << ',' << (o.success ? 1 : 0);
    for (const auto& c : columns) {
      out << ',';
      if (auto it = o.metrics.find(c); it != o.metrics.end()) out << csv_number(it->second);
    }
    out << '\n';
  }
}

void emit_report(const ExperimentResult& result, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  emit_report(result, format, out);
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace snc
