#pragma once

#include <cstdint>
#include <vector>

#include "randprox/costs.hpp"
#include "randprox/graph.hpp"

namespace randprox {

// Distributed gradient descent driven by pairwise gossip: on each activation
// the two endpoints take a gradient step with the shared 1/sqrt(k) stepsize
// and then average. x is flattened in vertex order, d doubles per vertex.
struct DgdState {
  std::vector<double> x;
  std::int64_t k = 0;  // global activation counter; stepsize at step k is gamma0/sqrt(k)
  std::int64_t primal_updates = 0;
  double gamma0 = 0.5;
};

DgdState zero_dgd_state(const Graph& g, int dim, double gamma0);

/// One activation of edge {v,w}: gradient step at both endpoints, then both
/// adopt the average. Throws NOT_AN_EDGE, and NONSMOOTH_AT_POINT when either
/// endpoint's cost has no gradient at its current iterate.
DgdState dgd_gossip_step(DgdState state, const Graph& g, VertexId v, VertexId w,
                         const CostList& costs, int dim);

}  // namespace randprox
