#pragma once

#include <span>
#include <vector>

#include "randprox/costs.hpp"
#include "randprox/graph.hpp"

namespace randprox {

// An element of X^{A_1} x ... x X^{A_L}: one dense array per component,
// entries in the component's canonical vertex order, d doubles per vertex.
class BlockVector {
 public:
  BlockVector() = default;

  /// Zero-initialized, shaped to the cover.
  BlockVector(const ComponentCover& cover, int dim);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  int dim() const { return dim_; }

  std::vector<double>& block(int l) { return blocks_[static_cast<size_t>(l)]; }
  const std::vector<double>& block(int l) const { return blocks_[static_cast<size_t>(l)]; }

  /// The d-dimensional slot of the pos-th vertex of component l.
  std::span<double> entry(int l, int pos);
  std::span<const double> entry(int l, int pos) const;

  bool same_shape(const BlockVector& other) const;
  bool matches(const ComponentCover& cover) const;

 private:
  std::vector<std::vector<double>> blocks_;
  int dim_ = 0;
};

double dot(const BlockVector& a, const BlockVector& b);
double squared_norm(const BlockVector& z);

BlockVector& axpy(BlockVector& y, double alpha, const BlockVector& x);  // y += alpha x
BlockVector subtract(const BlockVector& a, const BlockVector& b);

/// Inner product weighted by the inverse activation probabilities,
/// sum_l p_l^{-1} <a_l, b_l>. Diagnostic for observing the expected decrease
/// of the weighted distance to a fixed point.
double weighted_dot(const BlockVector& a, const BlockVector& b,
                    std::span<const double> probabilities);
double weighted_squared_norm(const BlockVector& z, std::span<const double> probabilities);

/// Cascade (pairwise) summation of n values spaced `stride` doubles apart.
double pairwise_sum(const double* data, int n, int stride);

/// Mean of coordinate `coord` over a block of `count` d-dimensional entries.
double block_coordinate_mean(const std::vector<double>& block, int dim, int coord);

// The (lambda, z) pair that uniquely represents zeta = lambda + rho z with
// z_l constant per component and lambda mean-zero per component. zbar stores
// each z_l by its constant.
struct DualPair {
  BlockVector lambda;
  std::vector<Point> zbar;
};

/// Splits zeta into its dual pair: lambda_l = zeta_l - mean(zeta_l),
/// zbar_l = mean(zeta_l) / rho. Block means use pairwise summation.
DualPair decompose(const BlockVector& zeta, double rho, const ComponentCover& cover);

/// Inverse of decompose: zeta_l(v) = lambda_l(v) + rho zbar_l.
BlockVector recompose(const DualPair& duals, double rho, const ComponentCover& cover);

}  // namespace randprox
