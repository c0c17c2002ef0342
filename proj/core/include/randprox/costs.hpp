#pragma once

#include <memory>
#include <span>
#include <vector>

#include "randprox/errors.hpp"

namespace randprox {

/// A point of the ambient Euclidean space, d >= 1 coordinates.
using Point = std::vector<double>;

// A private convex agent cost: evaluation, closed-form prox, and a gradient
// where one exists. Instances are immutable and freely shareable.
class CostFunction {
 public:
  virtual ~CostFunction() = default;

  /// Intrinsic dimension; 0 means "any" (dimension-free costs).
  virtual int dim() const = 0;

  virtual double value(std::span<const double> x) const = 0;

  /// prox_{f,rho}(u) = argmin_y f(y) + rho/2 |y - u|^2. rho > 0 is the
  /// caller's responsibility; use randprox::prox for a checked entry point.
  virtual void prox(double rho, std::span<const double> u,
                    std::span<double> out) const = 0;

  virtual bool smooth_at(std::span<const double> x) const = 0;

  /// Throws NONSMOOTH_AT_POINT where no gradient exists.
  virtual void gradient(std::span<const double> x, std::span<double> out) const = 0;

  virtual const char* name() const = 0;
};

using CostPtr = std::shared_ptr<const CostFunction>;
using CostList = std::vector<CostPtr>;

/// f = 0; its prox is the identity.
class ZeroCost final : public CostFunction {
 public:
  int dim() const override { return 0; }
  double value(std::span<const double>) const override { return 0.0; }
  void prox(double, std::span<const double> u, std::span<double> out) const override;
  bool smooth_at(std::span<const double>) const override { return true; }
  void gradient(std::span<const double> x, std::span<double> out) const override;
  const char* name() const override { return "zero"; }
};

/// f(y) = a * |y - c|^2 with a scalar isotropic scale a >= 0.
class QuadraticCost final : public CostFunction {
 public:
  QuadraticCost(double a, Point c);

  int dim() const override { return static_cast<int>(center_.size()); }
  double value(std::span<const double> x) const override;
  void prox(double rho, std::span<const double> u, std::span<double> out) const override;
  bool smooth_at(std::span<const double>) const override { return true; }
  void gradient(std::span<const double> x, std::span<double> out) const override;
  const char* name() const override { return "quadratic"; }

  double scale() const { return scale_; }
  const Point& center() const { return center_; }

 private:
  double scale_;
  Point center_;
};

/// f(y) = sum_i |y_i - c_i|; the prox is the coordinatewise soft threshold
/// shifted to c.
class AbsoluteValueCost final : public CostFunction {
 public:
  explicit AbsoluteValueCost(Point c);

  int dim() const override { return static_cast<int>(center_.size()); }
  double value(std::span<const double> x) const override;
  void prox(double rho, std::span<const double> u, std::span<double> out) const override;
  bool smooth_at(std::span<const double> x) const override;
  void gradient(std::span<const double> x, std::span<double> out) const override;
  const char* name() const override { return "abs"; }

  const Point& center() const { return center_; }

 private:
  Point center_;
};

/// Checked prox entry point: throws NONPOSITIVE_RHO for rho <= 0.
Point prox(const CostFunction& f, double rho, const Point& u);

/// Sum of the agents' costs at a common point.
double aggregate_value(const CostList& fs, const Point& x);

// Minimizer of the aggregate cost. All-quadratic lists use the closed-form
// weighted mean of the centers; otherwise a one-dimensional bisection on the
// aggregate's right derivative (accurate to 1e-10 or better) is used. Throws
// UNSUPPORTED_MIX when neither route applies.
Point centralized_minimizer(const CostList& fs);

}  // namespace randprox
