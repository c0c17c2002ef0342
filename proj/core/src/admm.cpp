#include "randprox/admm.hpp"

#include <cmath>

namespace randprox {
namespace {

void check_step_args(const AdmmState& state, double rho, const ComponentCover& cover,
                     const CostList& costs) {
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::NonpositiveRho, "admm step needs rho > 0");
  }
  if (!state.lambda.matches(cover) ||
      state.zbar.size() != static_cast<size_t>(cover.component_count()) ||
      state.x.size() != static_cast<size_t>(cover.vertex_count()) *
                            static_cast<size_t>(state.lambda.dim()) ||
      costs.size() != static_cast<size_t>(cover.vertex_count())) {
    throw Error(ErrorCode::ShapeMismatch, "admm state does not match the cover");
  }
}

// prox input for agent v: mean over sigma(v) of (zbar_m - lambda_m(v)/rho)
void prox_input(const AdmmState& state, int vertex_index, double rho,
                const ComponentCover& cover, std::span<double> out) {
  const int d = state.lambda.dim();
  const VertexId v = cover.vertices()[static_cast<size_t>(vertex_index)];
  const auto& sigma = cover.sigma_by_index(vertex_index);
  for (int j = 0; j < d; ++j) out[static_cast<size_t>(j)] = 0.0;
  for (int m : sigma) {
    const int pos = cover.position_in(m, v);
    const auto lam = state.lambda.entry(m, pos);
    const Point& zm = state.zbar[static_cast<size_t>(m)];
    for (int j = 0; j < d; ++j) {
      out[static_cast<size_t>(j)] +=
          zm[static_cast<size_t>(j)] - lam[static_cast<size_t>(j)] / rho;
    }
  }
  const double degree = static_cast<double>(sigma.size());
  for (int j = 0; j < d; ++j) out[static_cast<size_t>(j)] /= degree;
}

// refresh zbar_l and lambda_l from the freshly computed primal entries
void refresh_component(AdmmState& state, int l, double rho, const ComponentCover& cover) {
  const int d = state.lambda.dim();
  const auto& comp = cover.component(l);
  const int count = static_cast<int>(comp.size());

  Point& zl = state.zbar[static_cast<size_t>(l)];
  std::vector<double> gathered(static_cast<size_t>(count));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < count; ++i) {
      const size_t vi = static_cast<size_t>(cover.index_of(comp[static_cast<size_t>(i)]));
      gathered[static_cast<size_t>(i)] =
          state.x[vi * static_cast<size_t>(d) + static_cast<size_t>(j)];
    }
    zl[static_cast<size_t>(j)] = pairwise_sum(gathered.data(), count, 1) / count;
  }

  auto& lam = state.lambda.block(l);
  for (int i = 0; i < count; ++i) {
    const size_t vi = static_cast<size_t>(cover.index_of(comp[static_cast<size_t>(i)]));
    for (int j = 0; j < d; ++j) {
      lam[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)] +=
          rho * (state.x[vi * static_cast<size_t>(d) + static_cast<size_t>(j)] -
                 zl[static_cast<size_t>(j)]);
    }
  }
}

}  // namespace

AdmmState zero_admm_state(const ComponentCover& cover, int dim) {
  AdmmState state;
  state.x.assign(static_cast<size_t>(cover.vertex_count()) * static_cast<size_t>(dim), 0.0);
  state.lambda = BlockVector(cover, dim);
  state.zbar.assign(static_cast<size_t>(cover.component_count()),
                    Point(static_cast<size_t>(dim), 0.0));
  return state;
}

AdmmState sync_admm_step(AdmmState state, double rho, const ComponentCover& cover,
                         const CostList& costs) {
  check_step_args(state, rho, cover, costs);
  const int d = state.lambda.dim();
  const int n = cover.vertex_count();

  // x(v) <- prox_{f_v, rho|sigma(v)|}(Z(v) - B(v)) with Z the mean of the
  // component constants around v and B the mean of its duals scaled by 1/rho.
  std::vector<double> u(static_cast<size_t>(d));
  for (int i = 0; i < n; ++i) {
    const VertexId v = cover.vertices()[static_cast<size_t>(i)];
    const auto& sigma = cover.sigma_by_index(i);
    const double degree = static_cast<double>(sigma.size());
    for (int j = 0; j < d; ++j) {
      double z_acc = 0.0;
      double b_acc = 0.0;
      for (int m : sigma) {
        const int pos = cover.position_in(m, v);
        z_acc += state.zbar[static_cast<size_t>(m)][static_cast<size_t>(j)];
        b_acc += state.lambda.entry(m, pos)[static_cast<size_t>(j)];
      }
      u[static_cast<size_t>(j)] = z_acc / degree - b_acc / (rho * degree);
    }
    costs[static_cast<size_t>(i)]->prox(
        rho * degree, u,
        {state.x.data() + static_cast<size_t>(i) * static_cast<size_t>(d),
         static_cast<size_t>(d)});
  }

  for (int l = 0; l < cover.component_count(); ++l) {
    refresh_component(state, l, rho, cover);
  }

  state.k += 1;
  state.primal_updates += n;
  return state;
}

AdmmState async_admm_step(AdmmState state, int l, double rho,
                          const ComponentCover& cover, const CostList& costs) {
  check_step_args(state, rho, cover, costs);
  if (l < 0 || l >= cover.component_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "component index " + std::to_string(l) + " out of range");
  }
  const int d = state.lambda.dim();
  const auto& comp = cover.component(l);

  std::vector<double> u(static_cast<size_t>(d));
  for (VertexId v : comp) {
    const int vi = cover.index_of(v);
    prox_input(state, vi, rho, cover, u);
    const double degree = static_cast<double>(cover.sigma_by_index(vi).size());
    costs[static_cast<size_t>(vi)]->prox(
        rho * degree, u,
        {state.x.data() + static_cast<size_t>(vi) * static_cast<size_t>(d),
         static_cast<size_t>(d)});
  }

  refresh_component(state, l, rho, cover);

  state.k += 1;
  state.primal_updates += static_cast<std::int64_t>(comp.size());
  return state;
}

AdmmState gossip_edge_step(AdmmState state, VertexId v, VertexId w, double rho,
                           const ComponentCover& cover, const CostList& costs) {
  check_step_args(state, rho, cover, costs);
  const int l = cover.find_pair_component(v, w);
  if (l < 0) {
    throw Error(ErrorCode::NotAnEdge,
                "{" + std::to_string(v) + "," + std::to_string(w) +
                    "} is not a pairwise component of the cover");
  }
  const int d = state.lambda.dim();
  const int vi = cover.index_of(v);
  const int wi = cover.index_of(w);

  // Both endpoints prox on their own view of the network...
  std::vector<double> u(static_cast<size_t>(d));
  for (int idx : {vi, wi}) {
    prox_input(state, idx, rho, cover, u);
    const double degree = static_cast<double>(cover.sigma_by_index(idx).size());
    costs[static_cast<size_t>(idx)]->prox(
        rho * degree, u,
        {state.x.data() + static_cast<size_t>(idx) * static_cast<size_t>(d),
         static_cast<size_t>(d)});
  }

  // ...then exchange the two values and agree on their midpoint.
  const int pos_v = cover.position_in(l, v);
  const int pos_w = cover.position_in(l, w);
  Point& zl = state.zbar[static_cast<size_t>(l)];
  auto& lam = state.lambda.block(l);
  for (int j = 0; j < d; ++j) {
    const double xv = state.x[static_cast<size_t>(vi) * static_cast<size_t>(d) +
                              static_cast<size_t>(j)];
    const double xw = state.x[static_cast<size_t>(wi) * static_cast<size_t>(d) +
                              static_cast<size_t>(j)];
    zl[static_cast<size_t>(j)] = (xv + xw) / 2.0;
    lam[static_cast<size_t>(pos_v) * static_cast<size_t>(d) + static_cast<size_t>(j)] +=
        rho * (xv - xw) / 2.0;
    lam[static_cast<size_t>(pos_w) * static_cast<size_t>(d) + static_cast<size_t>(j)] +=
        rho * (xw - xv) / 2.0;
  }

  state.k += 1;
  state.primal_updates += 2;
  return state;
}

double consensus_disagreement(const AdmmState& state, int dim) {
  const int n = static_cast<int>(state.x.size()) / dim;
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      double sq = 0.0;
      for (int j = 0; j < dim; ++j) {
        const double diff = state.x[static_cast<size_t>(a) * static_cast<size_t>(dim) +
                                    static_cast<size_t>(j)] -
                            state.x[static_cast<size_t>(b) * static_cast<size_t>(dim) +
                                    static_cast<size_t>(j)];
        sq += diff * diff;
      }
      worst = std::max(worst, std::sqrt(sq));
    }
  }
  return worst;
}

BlockVector lift_state(const AdmmState& state, double rho, const ComponentCover& cover) {
  DualPair duals;
  duals.lambda = state.lambda;
  duals.zbar = state.zbar;
  return recompose(duals, rho, cover);
}

}  // namespace randprox
