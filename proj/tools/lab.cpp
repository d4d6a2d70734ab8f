// lab: command-line front end for the snc laboratory.

#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snc/bijumbled.hpp"
#include "snc/exhaustive.hpp"
#include "snc/experiment.hpp"
#include "snc/finders.hpp"
#include "snc/graph_io.hpp"
#include "snc/parallel.hpp"
#include "snc/random_models.hpp"
#include "snc/serialize.hpp"
#include "snc/typicality.hpp"

namespace {

struct Common {
  unsigned workers = 0;
  std::string out;

  unsigned worker_count() const { return workers > 0 ? workers : snc::default_worker_count(); }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error(path + ": cannot open for writing");
  f << text;
  if (!f) throw std::runtime_error(path + ": write failed");
}

void print_json(const Common& common, const nlohmann::json& j) { write_text(common.out, j.dump(2) + "\n"); }

void summarize(const snc::ExperimentResult& r) {
  std::cerr << to_string(r.spec.kind) << ": " << r.successes << "/" << r.trials << " successes (root seed "
            << snc::format_seed(r.spec.seed) << ", stream tag " << to_string(snc::StreamTag::trial) << ", "
            << r.wall_time_seconds << " s)\n";
  for (const auto& [key, total] : r.metric_totals)
    if (key.find('.') == std::string::npos || key.rfind("regime.", 0) == 0)
      std::cerr << "  " << key << " total " << total << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seymour second-neighbourhood laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("-j,--workers", common.workers, "Worker threads (default: SNC_LAB_WORKERS or hardware)");
  app.add_option("-o,--out", common.out, "Write output here instead of stdout");

  // run
  std::string spec_path;
  std::string run_format = "json";
  auto* run = app.add_subcommand("run", "Run an experiment spec and emit its report");
  run->add_option("spec", spec_path, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--format", run_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // replay
  std::size_t replay_index = 0;
  std::string replay_seed;
  auto* replay = app.add_subcommand("replay", "Re-run one trial of a spec");
  replay->add_option("spec", spec_path, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
  replay->add_option("--trial", replay_index, "Trial index")->required();
  replay->add_option("--seed", replay_seed, "Trial seed (default: derived from the spec)");

  // report
  std::string result_path;
  std::string report_format = "json";
  auto* report = app.add_subcommand("report", "Re-emit a stored result as JSON or CSV");
  report->add_option("result", result_path, "Result file written by 'run'")->required()->check(CLI::ExistingFile);
  report->add_option("--format", report_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // brute-force
  std::string graph_path;
  auto* brute = app.add_subcommand("brute-force", "Check every orientation of a graph for a Seymour vertex");
  brute->add_option("graph", graph_path, "Edge-list file")->required()->check(CLI::ExistingFile);

  // tournaments
  std::size_t tournament_n = 0;
  auto* tournaments = app.add_subcommand("tournaments", "Check every tournament on n vertices");
  tournaments->add_option("n", tournament_n, "Order (at most 8)")->required();

  // finder
  std::string finder_name;
  std::string arc_path;
  double p = 0;
  double alpha = 0.05;
  double eps = 0.001;
  auto* finder = app.add_subcommand("finder", "Run a constructive finder on an oriented graph");
  finder->add_option("kind", finder_name, "typical | mindeg | bijumbled")
      ->required()
      ->check(CLI::IsMember({"typical", "mindeg", "min_outdegree", "bijumbled"}));
  finder->add_option("arcs", arc_path, "Arc-list file")->required()->check(CLI::ExistingFile);
  finder->add_option("--p", p, "Edge density");
  finder->add_option("--alpha", alpha, "alpha for the typical finder");
  finder->add_option("--eps", eps, "eps for the bijumbled finder");

  // certify
  std::string mode = "sampled";
  std::size_t budget = 10000;
  std::string seed_text = "0";
  std::optional<double> a_constant;
  std::optional<double> alpha_override;
  auto add_cert_flags = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Edge-list file")->required()->check(CLI::ExistingFile);
    sub->add_option("--p", p, "Edge density")->required();
    sub->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    sub->add_option("--budget", budget, "Sampled draws per quantified item");
    sub->add_option("--seed", seed_text, "Root seed, decimal or 0x-hex");
  };
  auto* typical = app.add_subcommand("typical", "Check p-typicality of a graph");
  add_cert_flags(typical);
  auto* bij = app.add_subcommand("bijumbled", "Check weak (p, alpha)-bijumbledness of a graph");
  add_cert_flags(bij);
  bij->add_option("--A", a_constant, "Constant A with alpha = A sqrt(np) (default e^2 sqrt 6)");
  bij->add_option("--alpha", alpha_override, "alpha directly (overrides --A)");

  // gnp
  std::size_t gnp_n = 0;
  std::string orient = "none";
  std::size_t min_out = 0;
  auto* gnp = app.add_subcommand("gnp", "Sample G(n,p), optionally oriented");
  gnp->add_option("n", gnp_n, "Order")->required();
  gnp->add_option("--p", p, "Edge density")->required();
  gnp->add_option("--seed", seed_text, "Root seed, decimal or 0x-hex");
  gnp->add_option("--orient", orient, "none | uniform | mindeg")->check(CLI::IsMember({"none", "uniform", "mindeg"}));
  gnp->add_option("--d", min_out, "Target minimum out-degree for --orient mindeg");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto spec = snc::load_spec(spec_path);
      const auto result = snc::run_experiment(spec, common.worker_count());
      summarize(result);
      if (common.out.empty() || common.out == "-")
        snc::emit_report(result, snc::parse_report_format(run_format), std::cout);
      else
        snc::emit_report(result, snc::parse_report_format(run_format), std::filesystem::path(common.out));
      return 0;
    }
    if (*replay) {
      const auto spec = snc::load_spec(spec_path);
      const snc::Seed seed = replay_seed.empty() ? snc::trial_seed(spec, replay_index) : snc::parse_seed(replay_seed);
      const auto o = snc::run_trial(spec, replay_index, seed);
      print_json(common, {{"trial", o.trial}, {"seed", snc::format_seed(o.seed)}, {"success", o.success},
                          {"metrics", o.metrics}});
      return 0;
    }
    if (*report) {
      const auto result = snc::load_result(result_path);
      if (common.out.empty() || common.out == "-")
        snc::emit_report(result, snc::parse_report_format(report_format), std::cout);
      else
        snc::emit_report(result, snc::parse_report_format(report_format), std::filesystem::path(common.out));
      return 0;
    }
    if (*brute) {
      const auto g = snc::read_edge_list(std::filesystem::path(graph_path));
      print_json(common, snc::search_outcome_json(snc::brute_force_membership_in_S(g, common.worker_count())));
      return 0;
    }
    if (*tournaments) {
      print_json(common, snc::search_outcome_json(snc::sweep_tournaments(tournament_n, common.worker_count())));
      return 0;
    }
    if (*finder) {
      const auto d = snc::read_arc_list(std::filesystem::path(arc_path));
      snc::FinderTrace trace;
      switch (snc::parse_finder_kind(finder_name)) {
        case snc::FinderKind::typical: trace = snc::finder_typical(d, p, alpha); break;
        case snc::FinderKind::min_outdegree: trace = snc::finder_min_outdegree(d); break;
        case snc::FinderKind::bijumbled: trace = snc::finder_bijumbled(d, p, eps); break;
      }
      print_json(common, snc::finder_trace_json(trace));
      return 0;
    }
    if (*typical || *bij) {
      const auto g = snc::read_edge_list(std::filesystem::path(graph_path));
      snc::CheckOptions options;
      options.mode = snc::parse_check_mode(mode);
      options.budget = budget;
      options.seed = snc::parse_seed(seed_text);
      options.workers = common.worker_count();
      if (*typical) {
        print_json(common, snc::typicality_report_json(snc::check_typicality(g, p, options)));
        return 0;
      }
      const auto params = alpha_override
                              ? snc::BijumbledParams(p, *alpha_override)
                              : snc::BijumbledParams::from_constant(g.order(), p,
                                                                    a_constant.value_or(snc::default_jumbled_constant()));
      print_json(common, snc::bijumbled_report_json(snc::certify_weak_bijumbled(g, params, options), params, options));
      return 0;
    }
    if (*gnp) {
      const snc::Seed root = snc::parse_seed(seed_text);
      auto g = std::make_shared<const snc::Graph>(
          snc::sample_gnp(snc::GnpParams(gnp_n, p), root.derive(0, snc::StreamTag::graph)));
      std::ostringstream text;
      if (orient == "none") {
        snc::write_edge_list(text, *g);
      } else if (orient == "uniform") {
        snc::write_arc_list(text, snc::sample_uniform_orientation(g, root.derive(0, snc::StreamTag::orientation)));
      } else {
        const auto d = snc::orient_with_min_outdegree(g, min_out, root.derive(0, snc::StreamTag::orientation));
        if (!d) {
          std::cerr << "lab: no orientation with minimum out-degree " << min_out << " exists\n";
          return 1;
        }
        snc::write_arc_list(text, *d);
      }
      write_text(common.out, text.str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "lab: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
