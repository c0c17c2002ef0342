#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "randprox/experiment.hpp"

namespace randprox {

/// Shortest-round-trip decimal form of v (17 significant digits).
std::string format_double(double v);

// Serializes a trace. The first line is a `#` comment naming the random
// generator, the second is the fixed column header
// `k,primal_updates,squared_error,disagreement,algorithm,seed`.
std::string trace_to_csv(const std::vector<MetricsRecord>& records);

struct SummaryRow {
  std::string algorithm;
  std::int64_t primal_updates = 0;
  double median_squared_error = 0.0;
};

/// Per-algorithm medians across seeds at every recorded checkpoint. All runs
/// of one algorithm must share a record layout (same budget and cadence).
std::vector<SummaryRow> summarize(const std::vector<SweepResult>& runs);

std::string summary_to_csv(const std::vector<SummaryRow>& rows);

/// Median with the usual even-count average.
double median(std::vector<double> values);

/// Writes via a temporary file and rename, so readers never observe a
/// partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace randprox
