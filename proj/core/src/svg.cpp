#include "randprox/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace randprox {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 84.0;
constexpr double kRight = 696.0;
constexpr double kTop = 28.0;
constexpr double kBottom = 424.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf"};

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string tick_label(double decade) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "1e%d", static_cast<int>(decade));
  return buffer;
}

}  // namespace

PlotSeries to_series(const std::vector<MetricsRecord>& records) {
  PlotSeries s;
  if (!records.empty()) s.label = records.front().algorithm;
  s.x.reserve(records.size());
  s.y.reserve(records.size());
  for (const MetricsRecord& r : records) {
    s.x.push_back(static_cast<double>(r.primal_updates));
    s.y.push_back(r.squared_error);
  }
  return s;
}

std::string render_convergence_svg(const std::vector<PlotSeries>& series) {
  double x_max = 1.0;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const PlotSeries& s : series) {
    for (double x : s.x) x_max = std::max(x_max, x);
    for (double y : s.y) {
      const double clamped = std::max(y, 1e-300);
      y_min = std::min(y_min, clamped);
      y_max = std::max(y_max, clamped);
    }
  }
  if (!std::isfinite(y_min)) {
    y_min = 1e-12;
    y_max = 1.0;
  }
  double lo = std::floor(std::log10(y_min));
  double hi = std::ceil(std::log10(y_max));
  if (hi <= lo) hi = lo + 1.0;

  const auto map_x = [&](double x) { return kLeft + (kRight - kLeft) * (x / x_max); };
  const auto map_y = [&](double y) {
    const double t = (std::log10(std::max(y, 1e-300)) - lo) / (hi - lo);
    return kBottom - (kBottom - kTop) * t;
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
         num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // frame
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(kRight - kLeft) + "\" height=\"" + num(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  // y grid: one line per decade (thinned beyond 12 decades)
  const int decades = static_cast<int>(hi - lo);
  const int stride = decades > 12 ? (decades + 11) / 12 : 1;
  for (int e = 0; e <= decades; e += stride) {
    const double y = map_y(std::pow(10.0, lo + e));
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(y) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(kLeft - 8.0) + "\" y=\"" + num(y + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           tick_label(lo + e) + "</text>\n";
  }

  // x ticks
  for (int i = 0; i <= 5; ++i) {
    const double x_value = x_max * i / 5.0;
    const double x = map_x(x_value);
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(kBottom + 5.0) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    char label[32];
    std::snprintf(label, sizeof(label), "%.0f", x_value);
    out += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           label + "</text>\n";
  }

  // axis labels
  out += "<text x=\"" + num((kLeft + kRight) / 2.0) + "\" y=\"" + num(kHeight - 14.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
         "primal updates</text>\n";
  out += "<text x=\"18.00\" y=\"" + num((kTop + kBottom) / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18.00 " +
         num((kTop + kBottom) / 2.0) + ")\">squared error</text>\n";

  // data
  for (size_t s = 0; s < series.size(); ++s) {
    const PlotSeries& ps = series[s];
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    for (size_t i = 0; i < ps.x.size() && i < ps.y.size(); ++i) {
      if (!points.empty()) points += ' ';
      points += num(map_x(ps.x[i])) + "," + num(map_y(ps.y[i]));
    }
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";

    const double ly = kTop + 18.0 + 18.0 * static_cast<double>(s);
    out += "<line x1=\"" + num(kRight - 150.0) + "\" y1=\"" + num(ly - 4.0) + "\" x2=\"" +
           num(kRight - 122.0) + "\" y2=\"" + num(ly - 4.0) + "\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + num(kRight - 116.0) + "\" y=\"" + num(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + ps.label + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace randprox
