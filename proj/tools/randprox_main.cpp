// Command-line front end: validate experiment configs, execute seeded runs,
// and sweep algorithm/seed grids into CSV traces and SVG charts.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "randprox/config.hpp"
#include "randprox/experiment.hpp"
#include "randprox/graph.hpp"
#include "randprox/svg.hpp"
#include "randprox/trace.hpp"

namespace fs = std::filesystem;
using namespace randprox;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

int thread_cap() {
  const char* env = std::getenv("RANDPROX_THREADS");
  if (env == nullptr) return 0;
  const int parsed = std::atoi(env);
  return parsed > 0 ? parsed : 1;
}

std::string job_file_name(const SweepJob& job) {
  return std::string(to_string(job.algorithm)) + "-seed" + std::to_string(job.seed) +
         ".csv";
}

int cmd_validate(const std::string& config_path) {
  const ExperimentConfig cfg = load_config_file(config_path);

  // report the cover verdict in its own vocabulary before the full check
  try {
    const Graph graph(cfg.vertices, cfg.edges);
    ComponentCover cover = [&] {
      switch (cfg.cover_mode) {
        case CoverMode::Full: return full_cover(graph);
        case CoverMode::Edges: return edge_cover(graph);
        case CoverMode::Custom: return ComponentCover(graph, cfg.custom_sets);
      }
      throw Error(ErrorCode::ConfigInvalid, "cover.mode: unknown");
    }();
    const CoverVerdict verdict = validate_cover(graph, cover);
    if (!verdict.ok()) {
      std::cout << verdict.message << "\n";
      return kExitConfig;
    }
    validate_config(cfg);
    for (const std::string& warning : verdict.warnings) {
      std::cout << "warning: " << warning << "\n";
    }
  } catch (const Error& e) {
    // anything wrong with the described problem is a config problem here
    std::cout << e.what() << "\n";
    return kExitConfig;
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_dir, bool plot) {
  const ExperimentConfig cfg = load_config_file(config_path);
  validate_config(cfg);

  const auto records = run_experiment(cfg);
  fs::create_directories(out_dir);
  write_file_atomic(fs::path(out_dir) / "trace.csv", trace_to_csv(records));
  if (plot) {
    write_file_atomic(fs::path(out_dir) / "plot.svg",
                      render_convergence_svg({to_series(records)}));
  }

  const MetricsRecord& last = records.back();
  std::cout << to_string(cfg.algorithm) << " seed " << cfg.seed << ": " << last.k
            << " iterations, " << last.primal_updates << " primal updates, "
            << "squared error " << format_double(last.squared_error) << "\n";
  std::cout << "wrote " << (fs::path(out_dir) / "trace.csv").string() << "\n";
  return 0;
}

int cmd_compare(const std::string& config_path, const std::string& algorithms_csv,
                int seeds, const std::string& out_dir, bool plot) {
  const ExperimentConfig base = load_config_file(config_path);

  std::vector<Algorithm> algorithms;
  std::stringstream splitter(algorithms_csv);
  std::string token;
  while (std::getline(splitter, token, ',')) {
    if (!token.empty()) algorithms.push_back(algorithm_from_string(token));
  }
  if (algorithms.empty()) {
    throw Error(ErrorCode::ConfigInvalid, "--algorithms: no algorithms listed");
  }
  if (seeds < 1) {
    throw Error(ErrorCode::ConfigInvalid, "--seeds: must be >= 1");
  }
  {
    ExperimentConfig probe = base;
    for (Algorithm a : algorithms) {
      probe.algorithm = a;
      validate_config(probe);
    }
  }

  const auto results = run_sweep(base, algorithms, seeds, thread_cap());

  fs::create_directories(out_dir);
  for (const SweepResult& result : results) {
    write_file_atomic(fs::path(out_dir) / job_file_name(result.job),
                      trace_to_csv(result.records));
  }
  const auto summary = summarize(results);
  write_file_atomic(fs::path(out_dir) / "summary.csv", summary_to_csv(summary));

  if (plot) {
    // one median curve per algorithm
    std::vector<PlotSeries> series;
    for (const SummaryRow& row : summary) {
      if (series.empty() || series.back().label != row.algorithm) {
        series.push_back(PlotSeries{row.algorithm, {}, {}});
      }
      series.back().x.push_back(static_cast<double>(row.primal_updates));
      series.back().y.push_back(row.median_squared_error);
    }
    write_file_atomic(fs::path(out_dir) / "plot.svg", render_convergence_svg(series));
  }

  std::cout << "ran " << results.size() << " jobs (" << algorithms.size()
            << " algorithms x " << seeds << " seeds), wrote "
            << (fs::path(out_dir) / "summary.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized asynchronous ADMM consensus experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::string algorithms = "sync-admm,async-admm,dgd-gossip";
  int seeds = 10;
  bool plot = false;

  CLI::App* validate = app.add_subcommand("validate", "check a config file");
  validate->add_option("--config", config_path, "JSON config")->required();

  CLI::App* run = app.add_subcommand("run", "execute one seeded experiment");
  run->add_option("--config", config_path, "JSON config")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--plot", plot, "also write plot.svg");

  CLI::App* compare = app.add_subcommand("compare", "sweep algorithms over seeds");
  compare->add_option("--config", config_path, "JSON config")->required();
  compare->add_option("--algorithms", algorithms, "comma-separated list");
  compare->add_option("--seeds", seeds, "number of consecutive seeds");
  compare->add_option("--out", out_dir, "output directory");
  compare->add_flag("--plot", plot, "also write plot.svg of the medians");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(config_path);
    if (run->parsed()) return cmd_run(config_path, out_dir, plot);
    if (compare->parsed()) return cmd_compare(config_path, algorithms, seeds, out_dir, plot);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::ConfigInvalid ? kExitConfig : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
