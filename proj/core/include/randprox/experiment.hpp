#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "randprox/activation.hpp"
#include "randprox/admm.hpp"
#include "randprox/costs.hpp"
#include "randprox/dgd.hpp"
#include "randprox/graph.hpp"

namespace randprox {

enum class Algorithm { SyncAdmm, AsyncAdmm, DgdGossip };

const char* to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view name);  // CONFIG_INVALID on unknown

enum class CoverMode { Full, Edges, Custom };
enum class ActivationMode { Uniform, Explicit, NodeWakeup };

struct CostSpec {
  enum class Type { Zero, Quadratic, AbsoluteValue };
  Type type = Type::Zero;
  double a = 1.0;  // quadratic scale
  Point c;         // center (quadratic / abs)
};

/// Optional initial values; empty containers mean "start from zero".
struct InitSpec {
  std::vector<double> x;                       // |V| * d
  std::vector<std::vector<double>> lambda;     // per component, |A_l| * d
  std::vector<Point> zbar;                     // per component, d

  bool empty() const { return x.empty() && lambda.empty() && zbar.empty(); }
};

// A complete, seeded run description. Vertices are kept sorted and costs are
// aligned to that order.
struct ExperimentConfig {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  CoverMode cover_mode = CoverMode::Edges;
  std::vector<std::vector<VertexId>> custom_sets;
  int dim = 1;
  std::vector<CostSpec> costs;
  Algorithm algorithm = Algorithm::AsyncAdmm;
  double rho = 1.0;
  double gamma0 = 0.5;
  ActivationMode activation_mode = ActivationMode::NodeWakeup;
  std::vector<double> activation_p;  // Explicit mode
  std::vector<double> wake_q;        // NodeWakeup mode; empty = uniform
  std::int64_t budget = 5000;
  std::int64_t record_every = 10;
  std::uint64_t seed = 1;
  /// Optional early stop: end the run once the squared error drops to this.
  std::optional<double> stop_squared_error;
  InitSpec init;

  /// The reference five-agent ring-with-chord experiment: edge cover,
  /// quadratic costs f_v(x) = (x - v)^2, async updates under uniform node
  /// wakeup.
  static ExperimentConfig g5_defaults();
};

struct MetricsRecord {
  std::int64_t k = 0;
  std::int64_t primal_updates = 0;
  double squared_error = 0.0;
  double disagreement = 0.0;
  std::string algorithm;
  std::uint64_t seed = 0;
};

/// sum_v |x(v) - xstar|^2 over the flattened per-vertex estimates.
double squared_error(std::span<const double> x, int dim, const Point& xstar);

/// Cost list materialized from the specs, aligned to sorted vertex order.
CostList build_costs(const ExperimentConfig& cfg);

// Full semantic validation: graph well-formed, cover passes both cover
// conditions, costs sized and dimensioned, activation law valid, init shapes
// consistent and dual blocks mean-zero. Throws CONFIG_INVALID with the
// offending field path.
void validate_config(const ExperimentConfig& cfg);

// Executes the configured algorithm for the given budget, recording a
// metrics row at k = 0, every record_every activations, and at the final
// step. Bitwise reproducible for a fixed (config, seed).
std::vector<MetricsRecord> run_experiment(const ExperimentConfig& cfg);

struct SweepJob {
  Algorithm algorithm;
  std::uint64_t seed;
};

struct SweepResult {
  SweepJob job;
  std::vector<MetricsRecord> records;
};

// Runs every (algorithm, seed) pair over seeds base.seed .. base.seed+n-1,
// at most max_threads jobs in flight (<=0 picks the hardware concurrency).
// Results are ordered by (algorithm position, seed) regardless of scheduling.
std::vector<SweepResult> run_sweep(const ExperimentConfig& base,
                                   std::span<const Algorithm> algorithms,
                                   int seed_count, int max_threads);

}  // namespace randprox
