#pragma once

#include <string>
#include <vector>

#include "randprox/experiment.hpp"

namespace randprox {

struct PlotSeries {
  std::string label;
  std::vector<double> x;  // primal updates
  std::vector<double> y;  // squared error
};

// Renders a self-contained static SVG: squared error on a log axis versus
// primal updates on a linear axis, one polyline per series. Deterministic
// output for identical input.
std::string render_convergence_svg(const std::vector<PlotSeries>& series);

PlotSeries to_series(const std::vector<MetricsRecord>& records);

}  // namespace randprox
