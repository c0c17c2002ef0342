#pragma once

#include <vector>

#include "randprox/graph.hpp"
#include "randprox/rng.hpp"

namespace randprox {

// The i.i.d. activation law over component indices: every probability
// strictly positive, summing to one. Immutable once built.
class ActivationProcess {
 public:
  /// Throws INVALID_DISTRIBUTION unless all p_l > 0 and |sum - 1| <= 1e-12.
  explicit ActivationProcess(std::vector<double> probabilities);

  static ActivationProcess uniform(int component_count);

  int component_count() const { return static_cast<int>(p_.size()); }
  const std::vector<double>& probabilities() const { return p_; }

  /// One i.i.d. draw; deterministic given the generator state.
  int draw(SplitMix64& rng) const;

 private:
  std::vector<double> p_;
  std::vector<double> cumulative_;
};

// Edge activation induced by the node-wakeup scheme: vertex v wakes with
// probability q_v and activates a uniformly random incident edge, so
// P[{v,w}] = q_v/|N_v| + q_w/|N_w| over the canonical edge order.
// q is aligned to g.vertices(); throws INVALID_Q unless all q_v > 0 and
// |sum q - 1| <= 1e-12.
ActivationProcess node_wakeup_law(const Graph& g, const std::vector<double>& q);

}  // namespace randprox
