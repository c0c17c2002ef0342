#include "randprox/costs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace randprox {

void ZeroCost::prox(double, std::span<const double> u, std::span<double> out) const {
  std::copy(u.begin(), u.end(), out.begin());
}

void ZeroCost::gradient(std::span<const double> x, std::span<double> out) const {
  (void)x;
  std::fill(out.begin(), out.end(), 0.0);
}

QuadraticCost::QuadraticCost(double a, Point c) : scale_(a), center_(std::move(c)) {
  if (!(scale_ >= 0.0) || !std::isfinite(scale_)) {
    throw Error(ErrorCode::ConfigInvalid, "quadratic scale must be finite and >= 0");
  }
  if (center_.empty()) {
    throw Error(ErrorCode::ConfigInvalid, "quadratic center must be non-empty");
  }
}

double QuadraticCost::value(std::span<const double> x) const {
  double s = 0.0;
  for (size_t i = 0; i < center_.size(); ++i) {
    const double d = x[i] - center_[i];
    s += d * d;
  }
  return scale_ * s;
}

void QuadraticCost::prox(double rho, std::span<const double> u,
                         std::span<double> out) const {
  // argmin_y a|y-c|^2 + rho/2 |y-u|^2 = (2ac + rho u) / (2a + rho)
  const double denom = 2.0 * scale_ + rho;
  for (size_t i = 0; i < center_.size(); ++i) {
    out[i] = (2.0 * scale_ * center_[i] + rho * u[i]) / denom;
  }
}

void QuadraticCost::gradient(std::span<const double> x, std::span<double> out) const {
  for (size_t i = 0; i < center_.size(); ++i) {
    out[i] = 2.0 * scale_ * (x[i] - center_[i]);
  }
}

AbsoluteValueCost::AbsoluteValueCost(Point c) : center_(std::move(c)) {
  if (center_.empty()) {
    throw Error(ErrorCode::ConfigInvalid, "abs center must be non-empty");
  }
}

double AbsoluteValueCost::value(std::span<const double> x) const {
  double s = 0.0;
  for (size_t i = 0; i < center_.size(); ++i) s += std::abs(x[i] - center_[i]);
  return s;
}

void AbsoluteValueCost::prox(double rho, std::span<const double> u,
                             std::span<double> out) const {
  // soft threshold at level 1/rho around the center
  const double kappa = 1.0 / rho;
  for (size_t i = 0; i < center_.size(); ++i) {
    const double t = u[i] - center_[i];
    if (t > kappa) {
      out[i] = center_[i] + (t - kappa);
    } else if (t < -kappa) {
      out[i] = center_[i] + (t + kappa);
    } else {
      out[i] = center_[i];
    }
  }
}

bool AbsoluteValueCost::smooth_at(std::span<const double> x) const {
  for (size_t i = 0; i < center_.size(); ++i) {
    if (x[i] == center_[i]) return false;
  }
  return true;
}

void AbsoluteValueCost::gradient(std::span<const double> x, std::span<double> out) const {
  for (size_t i = 0; i < center_.size(); ++i) {
    if (x[i] == center_[i]) {
      throw Error(ErrorCode::NonsmoothAtPoint,
                  "abs cost has no gradient at its center coordinate " + std::to_string(i));
    }
    out[i] = x[i] > center_[i] ? 1.0 : -1.0;
  }
}

Point prox(const CostFunction& f, double rho, const Point& u) {
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::NonpositiveRho, "prox needs rho > 0");
  }
  Point out(u.size());
  f.prox(rho, u, out);
  return out;
}

double aggregate_value(const CostList& fs, const Point& x) {
  double s = 0.0;
  for (const auto& f : fs) s += f->value(x);
  return s;
}

namespace {

int common_dimension(const CostList& fs) {
  int d = 0;
  for (const auto& f : fs) {
    const int fd = f->dim();
    if (fd == 0) continue;
    if (d == 0) {
      d = fd;
    } else if (d != fd) {
      throw Error(ErrorCode::ShapeMismatch, "cost dimensions disagree");
    }
  }
  return d;
}

// Right derivative of the aggregate at a scalar point; monotone
// nondecreasing by convexity, which makes sign bisection exact far past the
// resolution a value-comparison search can reach.
double aggregate_right_derivative(const CostList& fs, double x) {
  double d = 0.0;
  for (const auto& f : fs) {
    if (const auto* q = dynamic_cast<const QuadraticCost*>(f.get())) {
      d += 2.0 * q->scale() * (x - q->center()[0]);
    } else if (const auto* av = dynamic_cast<const AbsoluteValueCost*>(f.get())) {
      d += x >= av->center()[0] ? 1.0 : -1.0;
    }
  }
  return d;
}

double bisect_minimum_1d(const CostList& fs, double lo, double hi) {
  // invariant: d(lo) < 0 <= d(hi)
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (aggregate_right_derivative(fs, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Point centralized_minimizer(const CostList& fs) {
  if (fs.empty()) {
    throw Error(ErrorCode::UnsupportedMix, "no cost functions");
  }
  const int d = common_dimension(fs);

  // Closed form: weighted mean of quadratic centers.
  bool all_quadratic_or_zero = true;
  double total_scale = 0.0;
  for (const auto& f : fs) {
    if (dynamic_cast<const ZeroCost*>(f.get()) != nullptr) continue;
    const auto* q = dynamic_cast<const QuadraticCost*>(f.get());
    if (q == nullptr) {
      all_quadratic_or_zero = false;
      break;
    }
    total_scale += q->scale();
  }
  if (all_quadratic_or_zero && total_scale > 0.0) {
    Point xstar(static_cast<size_t>(d), 0.0);
    for (const auto& f : fs) {
      const auto* q = dynamic_cast<const QuadraticCost*>(f.get());
      if (q == nullptr) continue;
      for (int i = 0; i < d; ++i) xstar[i] += q->scale() * q->center()[i];
    }
    for (int i = 0; i < d; ++i) xstar[i] /= total_scale;
    return xstar;
  }

  // One-dimensional fallback: the minimum of a sum of convex pieces, each
  // anchored at a center, lies within the hull of the anchors.
  if (d == 1) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& f : fs) {
      const Point* c = nullptr;
      if (const auto* q = dynamic_cast<const QuadraticCost*>(f.get())) {
        if (q->scale() > 0.0) c = &q->center();
      } else if (const auto* av = dynamic_cast<const AbsoluteValueCost*>(f.get())) {
        c = &av->center();
      }
      if (c != nullptr) {
        lo = std::min(lo, (*c)[0]);
        hi = std::max(hi, (*c)[0]);
      }
    }
    if (!std::isfinite(lo)) {
      throw Error(ErrorCode::UnsupportedMix, "aggregate cost has no unique minimizer");
    }
    return {bisect_minimum_1d(fs, lo - 1.0, hi + 1.0)};
  }

  throw Error(ErrorCode::UnsupportedMix,
              "minimizer oracle supports quadratics or one-dimensional costs");
}

}  // namespace randprox
