#pragma once

#include <cstdint>
#include <vector>

#include "randprox/activation.hpp"
#include "randprox/block.hpp"
#include "randprox/costs.hpp"

namespace randprox {

// A fixed-point operator acting blockwise on Z: apply() evaluates every block
// from the same input, apply_block() evaluates a single one. Implementations
// must keep the two consistent.
class FixedPointOperator {
 public:
  virtual ~FixedPointOperator() = default;

  virtual BlockVector apply(const BlockVector& zeta) const = 0;
  virtual std::vector<double> apply_block(int l, const BlockVector& zeta) const = 0;
  virtual int block_count() const = 0;
};

class IdentityOperator final : public FixedPointOperator {
 public:
  explicit IdentityOperator(int blocks) : blocks_(blocks) {}
  BlockVector apply(const BlockVector& zeta) const override { return zeta; }
  std::vector<double> apply_block(int l, const BlockVector& zeta) const override {
    return zeta.block(l);
  }
  int block_count() const override { return blocks_; }

 private:
  int blocks_;
};

// Resolvent of the consensus Douglas-Rachford operator, evaluated through the
// primal prox formulas: with (lambda, zbar) = decompose(zeta),
//   x(v)      = prox_{f_v, rho |sigma(v)|}( mean_{m in sigma(v)}
//                                           (zbar_m - lambda_m(v)/rho) )
//   S_l(zeta) : v -> lambda_l(v) + rho x(v).
// Firmly non-expansive; its fixed points decompose into dual optima.
class DouglasRachfordResolvent final : public FixedPointOperator {
 public:
  /// The cover and cost list must outlive the operator. One cost per vertex,
  /// aligned to cover.vertices().
  DouglasRachfordResolvent(const ComponentCover& cover, const CostList& costs,
                           double rho, int dim);

  BlockVector apply(const BlockVector& zeta) const override;
  std::vector<double> apply_block(int l, const BlockVector& zeta) const override;
  int block_count() const override { return cover_->component_count(); }

  /// The primal point x(v) for every vertex at the given dual point,
  /// flattened in vertex order. At a fixed point this is the consensus
  /// minimizer replicated across agents.
  std::vector<double> primal_point(const BlockVector& zeta) const;

  double rho() const { return rho_; }
  int dim() const { return dim_; }
  const ComponentCover& cover() const { return *cover_; }

 private:
  void primal_from_duals(const DualPair& duals, int vertex_index,
                         std::span<double> out) const;

  const ComponentCover* cover_;
  const CostList* costs_;
  double rho_;
  int dim_;
};

/// Replaces block l of zeta with apply_block(l, zeta), leaving every other
/// block bit-identical. Throws INDEX_OUT_OF_RANGE for an invalid l.
BlockVector gs_hat_apply(const FixedPointOperator& op, int l, const BlockVector& zeta);

/// Deterministic fixed-point iteration zeta <- apply(zeta), `iterations` times.
BlockVector proximal_point_iterate(const FixedPointOperator& op, BlockVector zeta,
                                   int iterations);

// Randomized Gauss-Seidel iteration: at each step an i.i.d. component index
// is drawn from the activation law and only that block is refreshed. Returns
// the full trajectory zeta^0 .. zeta^k; deterministic given the seed.
std::vector<BlockVector> random_gs_iterate(const FixedPointOperator& op,
                                           BlockVector zeta0,
                                           const ActivationProcess& law,
                                           int iterations, std::uint64_t seed);

}  // namespace randprox
