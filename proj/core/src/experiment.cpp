#include "randprox/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace randprox {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::SyncAdmm: return "sync-admm";
    case Algorithm::AsyncAdmm: return "async-admm";
    case Algorithm::DgdGossip: return "dgd-gossip";
  }
  return "unknown";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "sync-admm") return Algorithm::SyncAdmm;
  if (name == "async-admm") return Algorithm::AsyncAdmm;
  if (name == "dgd-gossip") return Algorithm::DgdGossip;
  throw Error(ErrorCode::ConfigInvalid,
              "algorithm: unknown value '" + std::string(name) + "'");
}

ExperimentConfig ExperimentConfig::g5_defaults() {
  ExperimentConfig cfg;
  cfg.vertices = {1, 2, 3, 4, 5};
  cfg.edges = {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
  cfg.cover_mode = CoverMode::Edges;
  cfg.dim = 1;
  cfg.costs.resize(5);
  for (int v = 1; v <= 5; ++v) {
    cfg.costs[static_cast<size_t>(v - 1)] = {CostSpec::Type::Quadratic, 1.0,
                                             {static_cast<double>(v)}};
  }
  cfg.algorithm = Algorithm::AsyncAdmm;
  cfg.rho = 1.0;
  cfg.gamma0 = 0.5;
  cfg.activation_mode = ActivationMode::NodeWakeup;
  cfg.budget = 5000;
  cfg.record_every = 10;
  cfg.seed = 1;
  return cfg;
}

double squared_error(std::span<const double> x, int dim, const Point& xstar) {
  const int n = static_cast<int>(x.size()) / dim;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double diff =
          x[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)] -
          xstar[static_cast<size_t>(j)];
      total += diff * diff;
    }
  }
  return total;
}

CostList build_costs(const ExperimentConfig& cfg) {
  CostList costs;
  costs.reserve(cfg.costs.size());
  for (const CostSpec& spec : cfg.costs) {
    switch (spec.type) {
      case CostSpec::Type::Zero:
        costs.push_back(std::make_shared<ZeroCost>());
        break;
      case CostSpec::Type::Quadratic:
        costs.push_back(std::make_shared<QuadraticCost>(spec.a, spec.c));
        break;
      case CostSpec::Type::AbsoluteValue:
        costs.push_back(std::make_shared<AbsoluteValueCost>(spec.c));
        break;
    }
  }
  return costs;
}

namespace {

struct BuiltProblem {
  Graph graph;
  ComponentCover cover;
  CostList costs;
  Point xstar;
};

[[noreturn]] void config_error(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ConfigInvalid, path + ": " + why);
}

ComponentCover build_cover(const ExperimentConfig& cfg, const Graph& g) {
  switch (cfg.cover_mode) {
    case CoverMode::Full: return full_cover(g);
    case CoverMode::Edges: return edge_cover(g);
    case CoverMode::Custom: return ComponentCover(g, cfg.custom_sets);
  }
  config_error("cover.mode", "unknown mode");
}

ActivationProcess build_activation(const ExperimentConfig& cfg, const Graph& g,
                                   int component_count) {
  switch (cfg.activation_mode) {
    case ActivationMode::Uniform:
      return ActivationProcess::uniform(component_count);
    case ActivationMode::Explicit: {
      if (cfg.activation_p.size() != static_cast<size_t>(component_count)) {
        config_error("activation.p", "expected " + std::to_string(component_count) +
                                         " probabilities, got " +
                                         std::to_string(cfg.activation_p.size()));
      }
      return ActivationProcess(cfg.activation_p);
    }
    case ActivationMode::NodeWakeup: {
      if (component_count != g.edge_count()) {
        config_error("activation.mode",
                     "node-wakeup requires pairwise (edge) components");
      }
      std::vector<double> q = cfg.wake_q;
      if (q.empty()) {
        q.assign(static_cast<size_t>(g.vertex_count()), 1.0 / g.vertex_count());
      }
      return node_wakeup_law(g, q);
    }
  }
  config_error("activation.mode", "unknown mode");
}

BuiltProblem build_problem(const ExperimentConfig& cfg) {
  Graph graph = [&] {
    try {
      return Graph(cfg.vertices, cfg.edges);
    } catch (const Error& e) {
      config_error("graph", e.what());
    }
  }();

  ComponentCover cover = [&] {
    try {
      return build_cover(cfg, graph);
    } catch (const Error& e) {
      config_error("cover", e.what());
    }
  }();

  const CoverVerdict verdict = validate_cover(graph, cover);
  if (!verdict.ok()) config_error("cover", verdict.message);

  if (cfg.dim < 1) config_error("dimension", "must be >= 1");
  if (cfg.costs.size() != static_cast<size_t>(graph.vertex_count())) {
    config_error("costs", "expected one cost per vertex (" +
                              std::to_string(graph.vertex_count()) + "), got " +
                              std::to_string(cfg.costs.size()));
  }
  for (size_t i = 0; i < cfg.costs.size(); ++i) {
    const CostSpec& spec = cfg.costs[i];
    const std::string path = "costs[" + std::to_string(i) + "]";
    if (spec.type == CostSpec::Type::Quadratic && !(spec.a >= 0.0)) {
      config_error(path + ".a", "must be >= 0");
    }
    if (spec.type != CostSpec::Type::Zero &&
        spec.c.size() != static_cast<size_t>(cfg.dim)) {
      config_error(path + ".c", "expected " + std::to_string(cfg.dim) +
                                    " coordinates, got " + std::to_string(spec.c.size()));
    }
    for (double value : spec.c) {
      if (!std::isfinite(value)) config_error(path + ".c", "coordinates must be finite");
    }
  }

  CostList costs = [&] {
    try {
      return build_costs(cfg);
    } catch (const Error& e) {
      config_error("costs", e.what());
    }
  }();

  Point xstar = [&] {
    try {
      return centralized_minimizer(costs);
    } catch (const Error& e) {
      config_error("costs", std::string("minimizer oracle: ") + e.what());
    }
  }();

  return BuiltProblem{std::move(graph), std::move(cover), std::move(costs),
                      std::move(xstar)};
}

AdmmState initial_admm_state(const ExperimentConfig& cfg, const ComponentCover& cover) {
  AdmmState state = zero_admm_state(cover, cfg.dim);
  const InitSpec& init = cfg.init;
  if (!init.x.empty()) {
    if (init.x.size() != state.x.size()) config_error("init.x", "wrong length");
    state.x = init.x;
  }
  if (!init.zbar.empty()) {
    if (init.zbar.size() != state.zbar.size()) config_error("init.zbar", "wrong length");
    for (size_t l = 0; l < init.zbar.size(); ++l) {
      if (init.zbar[l].size() != static_cast<size_t>(cfg.dim)) {
        config_error("init.zbar[" + std::to_string(l) + "]", "wrong dimension");
      }
    }
    state.zbar = init.zbar;
  }
  if (!init.lambda.empty()) {
    if (init.lambda.size() != static_cast<size_t>(cover.component_count())) {
      config_error("init.lambda", "wrong length");
    }
    for (int l = 0; l < cover.component_count(); ++l) {
      const auto& given = init.lambda[static_cast<size_t>(l)];
      if (given.size() != state.lambda.block(l).size()) {
        config_error("init.lambda[" + std::to_string(l) + "]", "wrong length");
      }
      state.lambda.block(l) = given;
      // the dual blocks must start on the mean-zero manifold
      for (int j = 0; j < cfg.dim; ++j) {
        if (std::abs(block_coordinate_mean(state.lambda.block(l), cfg.dim, j)) > 1e-9) {
          config_error("init.lambda[" + std::to_string(l) + "]",
                       "component duals must have zero mean");
        }
      }
    }
  }
  return state;
}

void validate_run_parameters(const ExperimentConfig& cfg) {
  if (!(cfg.rho > 0.0)) config_error("rho", "must be > 0");
  if (!(cfg.gamma0 > 0.0)) config_error("gamma0", "must be > 0");
  if (cfg.budget < 0) config_error("budget", "must be >= 0");
  if (cfg.record_every < 1) config_error("record_every", "must be >= 1");
  if (cfg.stop_squared_error && !(*cfg.stop_squared_error > 0.0)) {
    config_error("stop_squared_error", "must be > 0");
  }
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  validate_run_parameters(cfg);
  const BuiltProblem problem = build_problem(cfg);
  if (cfg.algorithm != Algorithm::DgdGossip) {
    build_activation(cfg, problem.graph, problem.cover.component_count());
    initial_admm_state(cfg, problem.cover);
  } else {
    build_activation(cfg, problem.graph, problem.graph.edge_count());
    if (!cfg.init.lambda.empty() || !cfg.init.zbar.empty()) {
      config_error("init", "dgd-gossip only accepts init.x");
    }
  }
}

std::vector<MetricsRecord> run_experiment(const ExperimentConfig& cfg) {
  validate_run_parameters(cfg);
  const BuiltProblem problem = build_problem(cfg);
  const std::string label = to_string(cfg.algorithm);

  std::vector<MetricsRecord> records;
  records.reserve(static_cast<size_t>(cfg.budget / cfg.record_every) + 2);

  const auto pairwise_spread = [&](std::span<const double> x) {
    AdmmState view;
    view.x.assign(x.begin(), x.end());
    return consensus_disagreement(view, cfg.dim);
  };
  // records the row when due and reports whether the optional error
  // threshold ends the run
  const auto after_step = [&](std::int64_t k, std::int64_t primal_updates,
                              std::span<const double> x) {
    const double error = squared_error(x, cfg.dim, problem.xstar);
    const bool stop = cfg.stop_squared_error && error <= *cfg.stop_squared_error;
    if (k % cfg.record_every == 0 || k == cfg.budget || stop) {
      records.push_back(MetricsRecord{k, primal_updates, error, pairwise_spread(x),
                                      label, cfg.seed});
    }
    return stop;
  };

  SplitMix64 rng = SplitMix64::stream(cfg.seed, 0);

  switch (cfg.algorithm) {
    case Algorithm::SyncAdmm: {
      AdmmState state = initial_admm_state(cfg, problem.cover);
      if (after_step(0, 0, state.x)) break;
      for (std::int64_t k = 1; k <= cfg.budget; ++k) {
        state = sync_admm_step(std::move(state), cfg.rho, problem.cover, problem.costs);
        if (after_step(k, state.primal_updates, state.x)) break;
      }
      break;
    }
    case Algorithm::AsyncAdmm: {
      const ActivationProcess law =
          build_activation(cfg, problem.graph, problem.cover.component_count());
      AdmmState state = initial_admm_state(cfg, problem.cover);
      if (after_step(0, 0, state.x)) break;
      for (std::int64_t k = 1; k <= cfg.budget; ++k) {
        const int l = law.draw(rng);
        state = async_admm_step(std::move(state), l, cfg.rho, problem.cover,
                                problem.costs);
        if (after_step(k, state.primal_updates, state.x)) break;
      }
      break;
    }
    case Algorithm::DgdGossip: {
      const ActivationProcess law =
          build_activation(cfg, problem.graph, problem.graph.edge_count());
      DgdState state = zero_dgd_state(problem.graph, cfg.dim, cfg.gamma0);
      if (!cfg.init.x.empty()) {
        if (cfg.init.x.size() != state.x.size()) config_error("init.x", "wrong length");
        state.x = cfg.init.x;
      }
      if (!cfg.init.lambda.empty() || !cfg.init.zbar.empty()) {
        config_error("init", "dgd-gossip only accepts init.x");
      }
      if (after_step(0, 0, state.x)) break;
      for (std::int64_t k = 1; k <= cfg.budget; ++k) {
        const Edge e = problem.graph.edges()[static_cast<size_t>(law.draw(rng))];
        state = dgd_gossip_step(std::move(state), problem.graph, e.first, e.second,
                                problem.costs, cfg.dim);
        if (after_step(k, state.primal_updates, state.x)) break;
      }
      break;
    }
  }

  return records;
}

std::vector<SweepResult> run_sweep(const ExperimentConfig& base,
                                   std::span<const Algorithm> algorithms,
                                   int seed_count, int max_threads) {
  std::vector<SweepJob> jobs;
  for (Algorithm a : algorithms) {
    for (int s = 0; s < seed_count; ++s) {
      jobs.push_back(SweepJob{a, base.seed + static_cast<std::uint64_t>(s)});
    }
  }

  std::vector<SweepResult> results(jobs.size());
  std::atomic<size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        ExperimentConfig cfg = base;
        cfg.algorithm = jobs[i].algorithm;
        cfg.seed = jobs[i].seed;
        results[i] = SweepResult{jobs[i], run_experiment(cfg)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  int thread_count = max_threads > 0
                         ? max_threads
                         : static_cast<int>(std::thread::hardware_concurrency());
  thread_count = std::max(1, std::min<int>(thread_count, static_cast<int>(jobs.size())));

  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace randprox
