#include "randprox/dgd.hpp"

#include <cmath>

namespace randprox {

DgdState zero_dgd_state(const Graph& g, int dim, double gamma0) {
  if (!(gamma0 > 0.0)) {
    throw Error(ErrorCode::ConfigInvalid, "gamma0 must be > 0");
  }
  DgdState state;
  state.x.assign(static_cast<size_t>(g.vertex_count()) * static_cast<size_t>(dim), 0.0);
  state.gamma0 = gamma0;
  return state;
}

DgdState dgd_gossip_step(DgdState state, const Graph& g, VertexId v, VertexId w,
                         const CostList& costs, int dim) {
  if (!g.has_edge(v, w)) {
    throw Error(ErrorCode::NotAnEdge,
                "{" + std::to_string(v) + "," + std::to_string(w) + "} is not an edge");
  }
  if (state.x.size() != static_cast<size_t>(g.vertex_count()) * static_cast<size_t>(dim) ||
      costs.size() != static_cast<size_t>(g.vertex_count())) {
    throw Error(ErrorCode::ShapeMismatch, "dgd state does not match the graph");
  }

  state.k += 1;
  const double step = state.gamma0 / std::sqrt(static_cast<double>(state.k));

  const int vi = g.index_of(v);
  const int wi = g.index_of(w);
  std::vector<double> grad(static_cast<size_t>(dim));
  for (int idx : {vi, wi}) {
    auto xi = std::span<double>(
        state.x.data() + static_cast<size_t>(idx) * static_cast<size_t>(dim),
        static_cast<size_t>(dim));
    costs[static_cast<size_t>(idx)]->gradient(xi, grad);
    for (int j = 0; j < dim; ++j) xi[static_cast<size_t>(j)] -= step * grad[static_cast<size_t>(j)];
  }

  for (int j = 0; j < dim; ++j) {
    const size_t a = static_cast<size_t>(vi) * static_cast<size_t>(dim) + static_cast<size_t>(j);
    const size_t b = static_cast<size_t>(wi) * static_cast<size_t>(dim) + static_cast<size_t>(j);
    const double avg = (state.x[a] + state.x[b]) / 2.0;
    state.x[a] = avg;
    state.x[b] = avg;
  }

  state.primal_updates += 2;
  return state;
}

}  // namespace randprox
