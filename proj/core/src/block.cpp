#include "randprox/block.hpp"

#include <cmath>

namespace randprox {

BlockVector::BlockVector(const ComponentCover& cover, int dim) : dim_(dim) {
  if (dim <= 0) {
    throw Error(ErrorCode::ShapeMismatch, "block vector dimension must be >= 1");
  }
  blocks_.resize(static_cast<size_t>(cover.component_count()));
  for (int l = 0; l < cover.component_count(); ++l) {
    blocks_[static_cast<size_t>(l)].assign(
        static_cast<size_t>(cover.component_size(l)) * static_cast<size_t>(dim), 0.0);
  }
}

std::span<double> BlockVector::entry(int l, int pos) {
  return {block(l).data() + static_cast<size_t>(pos) * static_cast<size_t>(dim_),
          static_cast<size_t>(dim_)};
}

std::span<const double> BlockVector::entry(int l, int pos) const {
  return {block(l).data() + static_cast<size_t>(pos) * static_cast<size_t>(dim_),
          static_cast<size_t>(dim_)};
}

bool BlockVector::same_shape(const BlockVector& other) const {
  if (dim_ != other.dim_ || blocks_.size() != other.blocks_.size()) return false;
  for (size_t l = 0; l < blocks_.size(); ++l) {
    if (blocks_[l].size() != other.blocks_[l].size()) return false;
  }
  return true;
}

bool BlockVector::matches(const ComponentCover& cover) const {
  if (block_count() != cover.component_count() || dim_ <= 0) return false;
  for (int l = 0; l < block_count(); ++l) {
    if (block(l).size() !=
        static_cast<size_t>(cover.component_size(l)) * static_cast<size_t>(dim_)) {
      return false;
    }
  }
  return true;
}

double dot(const BlockVector& a, const BlockVector& b) {
  if (!a.same_shape(b)) {
    throw Error(ErrorCode::ShapeMismatch, "dot of differently shaped block vectors");
  }
  double s = 0.0;
  for (int l = 0; l < a.block_count(); ++l) {
    const auto& x = a.block(l);
    const auto& y = b.block(l);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  }
  return s;
}

double squared_norm(const BlockVector& z) { return dot(z, z); }

BlockVector& axpy(BlockVector& y, double alpha, const BlockVector& x) {
  if (!y.same_shape(x)) {
    throw Error(ErrorCode::ShapeMismatch, "axpy of differently shaped block vectors");
  }
  for (int l = 0; l < y.block_count(); ++l) {
    auto& yb = y.block(l);
    const auto& xb = x.block(l);
    for (size_t i = 0; i < yb.size(); ++i) yb[i] += alpha * xb[i];
  }
  return y;
}

BlockVector subtract(const BlockVector& a, const BlockVector& b) {
  BlockVector out = a;
  axpy(out, -1.0, b);
  return out;
}

double weighted_dot(const BlockVector& a, const BlockVector& b,
                    std::span<const double> probabilities) {
  if (!a.same_shape(b) ||
      probabilities.size() != static_cast<size_t>(a.block_count())) {
    throw Error(ErrorCode::ShapeMismatch, "weighted dot shape mismatch");
  }
  double s = 0.0;
  for (int l = 0; l < a.block_count(); ++l) {
    const auto& x = a.block(l);
    const auto& y = b.block(l);
    double block_dot = 0.0;
    for (size_t i = 0; i < x.size(); ++i) block_dot += x[i] * y[i];
    s += block_dot / probabilities[static_cast<size_t>(l)];
  }
  return s;
}

double weighted_squared_norm(const BlockVector& z, std::span<const double> probabilities) {
  return weighted_dot(z, z, probabilities);
}

double pairwise_sum(const double* data, int n, int stride) {
  if (n <= 0) return 0.0;
  if (n == 1) return data[0];
  if (n == 2) return data[0] + data[static_cast<size_t>(stride)];
  const int half = n / 2;
  return pairwise_sum(data, half, stride) +
         pairwise_sum(data + static_cast<size_t>(half) * static_cast<size_t>(stride),
                      n - half, stride);
}

double block_coordinate_mean(const std::vector<double>& block, int dim, int coord) {
  const int count = static_cast<int>(block.size()) / dim;
  return pairwise_sum(block.data() + coord, count, dim) / count;
}

namespace {

void require_shape(const BlockVector& zeta, double rho, const ComponentCover& cover) {
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::NonpositiveRho, "decomposition needs rho > 0");
  }
  if (!zeta.matches(cover)) {
    throw Error(ErrorCode::ShapeMismatch, "block vector does not match the cover");
  }
}

}  // namespace

DualPair decompose(const BlockVector& zeta, double rho, const ComponentCover& cover) {
  require_shape(zeta, rho, cover);
  const int d = zeta.dim();
  DualPair out;
  out.lambda = zeta;
  out.zbar.resize(static_cast<size_t>(cover.component_count()));
  for (int l = 0; l < cover.component_count(); ++l) {
    const int count = cover.component_size(l);
    auto& lam = out.lambda.block(l);
    Point& zl = out.zbar[static_cast<size_t>(l)];
    zl.resize(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
      const double mean = pairwise_sum(zeta.block(l).data() + j, count, d) / count;
      for (int i = 0; i < count; ++i) {
        lam[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)] -= mean;
      }
      zl[static_cast<size_t>(j)] = mean / rho;
    }
  }
  return out;
}

BlockVector recompose(const DualPair& duals, double rho, const ComponentCover& cover) {
  require_shape(duals.lambda, rho, cover);
  if (duals.zbar.size() != static_cast<size_t>(cover.component_count())) {
    throw Error(ErrorCode::ShapeMismatch, "zbar length does not match the cover");
  }
  const int d = duals.lambda.dim();
  BlockVector zeta = duals.lambda;
  for (int l = 0; l < cover.component_count(); ++l) {
    auto& blk = zeta.block(l);
    const Point& zl = duals.zbar[static_cast<size_t>(l)];
    if (zl.size() != static_cast<size_t>(d)) {
      throw Error(ErrorCode::ShapeMismatch, "zbar entry dimension mismatch");
    }
    const int count = cover.component_size(l);
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < d; ++j) {
        blk[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)] +=
            rho * zl[static_cast<size_t>(j)];
      }
    }
  }
  return zeta;
}

}  // namespace randprox
