#pragma once

#include <cstdint>
#include <span>

#include "randprox/block.hpp"
#include "randprox/costs.hpp"
#include "randprox/graph.hpp"

namespace randprox {

// Agent-level state of the consensus ADMM iterations. x is flattened in the
// cover's vertex order, d doubles per vertex; lambda is mean-zero per
// component (preserved by every update given a mean-zero start).
struct AdmmState {
  std::vector<double> x;
  BlockVector lambda;
  std::vector<Point> zbar;
  std::int64_t k = 0;
  std::int64_t primal_updates = 0;

  std::span<const double> x_of(int vertex_index, int dim) const {
    return {x.data() + static_cast<size_t>(vertex_index) * static_cast<size_t>(dim),
            static_cast<size_t>(dim)};
  }
};

AdmmState zero_admm_state(const ComponentCover& cover, int dim);

// One synchronous iteration: every agent refreshes its primal estimate from
// the component constants and duals, every component re-averages, every dual
// moves by rho times the residual. Increments primal_updates by |V|.
AdmmState sync_admm_step(AdmmState state, double rho, const ComponentCover& cover,
                         const CostList& costs);

// One randomized iteration: only the agents of component l recompute
// (reading their other components' constants and duals as they stand), and
// only block l's constant and duals change. Increments primal_updates by
// |A_l|.
AdmmState async_admm_step(AdmmState state, int l, double rho,
                          const ComponentCover& cover, const CostList& costs);

// The pairwise specialization for edge covers, written as the two-agent
// message exchange: both endpoints prox, share results, and set
//   zbar   <- (x(v) + x(w)) / 2
//   lambda(v) <- lambda(v) + rho (x(v) - x(w)) / 2   (and symmetrically).
// Numerically equivalent to async_admm_step on the edge's component. Throws
// NOT_AN_EDGE when {v,w} is not a component of the cover.
AdmmState gossip_edge_step(AdmmState state, VertexId v, VertexId w, double rho,
                           const ComponentCover& cover, const CostList& costs);

/// max_{v,w} |x(v) - x(w)|, the distance from consensus.
double consensus_disagreement(const AdmmState& state, int dim);

/// The operator-view point zeta = lambda + rho z of the state.
BlockVector lift_state(const AdmmState& state, double rho, const ComponentCover& cover);

}  // namespace randprox
