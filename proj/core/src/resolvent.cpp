#include "randprox/resolvent.hpp"

#include <utility>

namespace randprox {

DouglasRachfordResolvent::DouglasRachfordResolvent(const ComponentCover& cover,
                                                   const CostList& costs,
                                                   double rho, int dim)
    : cover_(&cover), costs_(&costs), rho_(rho), dim_(dim) {
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::NonpositiveRho, "resolvent needs rho > 0");
  }
  if (dim <= 0) {
    throw Error(ErrorCode::ShapeMismatch, "resolvent dimension must be >= 1");
  }
  if (costs.size() != static_cast<size_t>(cover.vertex_count())) {
    throw Error(ErrorCode::ShapeMismatch, "one cost per vertex required");
  }
}

void DouglasRachfordResolvent::primal_from_duals(const DualPair& duals,
                                                 int vertex_index,
                                                 std::span<double> out) const {
  const VertexId v = cover_->vertices()[static_cast<size_t>(vertex_index)];
  const auto& sigma = cover_->sigma_by_index(vertex_index);
  const int degree = static_cast<int>(sigma.size());

  // prox input: mean over sigma(v) of (zbar_m - lambda_m(v)/rho)
  std::vector<double> u(static_cast<size_t>(dim_), 0.0);
  for (int m : sigma) {
    const int pos = cover_->position_in(m, v);
    const auto lam = duals.lambda.entry(m, pos);
    const Point& zm = duals.zbar[static_cast<size_t>(m)];
    for (int j = 0; j < dim_; ++j) {
      u[static_cast<size_t>(j)] += zm[static_cast<size_t>(j)] - lam[static_cast<size_t>(j)] / rho_;
    }
  }
  for (int j = 0; j < dim_; ++j) u[static_cast<size_t>(j)] /= degree;

  (*costs_)[static_cast<size_t>(vertex_index)]->prox(rho_ * degree, u, out);
}

BlockVector DouglasRachfordResolvent::apply(const BlockVector& zeta) const {
  const DualPair duals = decompose(zeta, rho_, *cover_);
  const std::vector<double> x = [&] {
    std::vector<double> out(static_cast<size_t>(cover_->vertex_count()) *
                            static_cast<size_t>(dim_));
    for (int i = 0; i < cover_->vertex_count(); ++i) {
      primal_from_duals(duals, i,
                        {out.data() + static_cast<size_t>(i) * static_cast<size_t>(dim_),
                         static_cast<size_t>(dim_)});
    }
    return out;
  }();

  BlockVector result = duals.lambda;
  for (int l = 0; l < cover_->component_count(); ++l) {
    const auto& comp = cover_->component(l);
    auto& blk = result.block(l);
    for (size_t pos = 0; pos < comp.size(); ++pos) {
      const size_t vi = static_cast<size_t>(cover_->index_of(comp[pos]));
      for (int j = 0; j < dim_; ++j) {
        blk[pos * static_cast<size_t>(dim_) + static_cast<size_t>(j)] +=
            rho_ * x[vi * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
      }
    }
  }
  return result;
}

std::vector<double> DouglasRachfordResolvent::apply_block(int l,
                                                          const BlockVector& zeta) const {
  if (l < 0 || l >= block_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "component index " + std::to_string(l));
  }
  const DualPair duals = decompose(zeta, rho_, *cover_);
  const auto& comp = cover_->component(l);
  std::vector<double> out(comp.size() * static_cast<size_t>(dim_));
  std::vector<double> x(static_cast<size_t>(dim_));
  for (size_t pos = 0; pos < comp.size(); ++pos) {
    primal_from_duals(duals, cover_->index_of(comp[pos]), x);
    const auto lam = duals.lambda.entry(l, static_cast<int>(pos));
    for (int j = 0; j < dim_; ++j) {
      out[pos * static_cast<size_t>(dim_) + static_cast<size_t>(j)] =
          lam[static_cast<size_t>(j)] + rho_ * x[static_cast<size_t>(j)];
    }
  }
  return out;
}

std::vector<double> DouglasRachfordResolvent::primal_point(const BlockVector& zeta) const {
  const DualPair duals = decompose(zeta, rho_, *cover_);
  std::vector<double> out(static_cast<size_t>(cover_->vertex_count()) *
                          static_cast<size_t>(dim_));
  for (int i = 0; i < cover_->vertex_count(); ++i) {
    primal_from_duals(duals, i,
                      {out.data() + static_cast<size_t>(i) * static_cast<size_t>(dim_),
                       static_cast<size_t>(dim_)});
  }
  return out;
}

BlockVector gs_hat_apply(const FixedPointOperator& op, int l, const BlockVector& zeta) {
  if (l < 0 || l >= op.block_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "component index " + std::to_string(l) + " out of range");
  }
  BlockVector out = zeta;
  out.block(l) = op.apply_block(l, zeta);
  return out;
}

BlockVector proximal_point_iterate(const FixedPointOperator& op, BlockVector zeta,
                                   int iterations) {
  for (int k = 0; k < iterations; ++k) zeta = op.apply(zeta);
  return zeta;
}

std::vector<BlockVector> random_gs_iterate(const FixedPointOperator& op,
                                           BlockVector zeta0,
                                           const ActivationProcess& law,
                                           int iterations, std::uint64_t seed) {
  if (law.component_count() != op.block_count()) {
    throw Error(ErrorCode::InvalidDistribution,
                "activation law size does not match the operator blocks");
  }
  std::vector<BlockVector> trajectory;
  trajectory.reserve(static_cast<size_t>(iterations) + 1);
  trajectory.push_back(std::move(zeta0));
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  for (int k = 0; k < iterations; ++k) {
    const int l = law.draw(rng);
    trajectory.push_back(gs_hat_apply(op, l, trajectory.back()));
  }
  return trajectory;
}

}  // namespace randprox
