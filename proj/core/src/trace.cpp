#include "randprox/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>

#include "randprox/rng.hpp"

namespace randprox {

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string trace_to_csv(const std::vector<MetricsRecord>& records) {
  std::string out;
  out.reserve(records.size() * 64 + 128);
  out += "# rng=";
  out += SplitMix64::algorithm_name();
  out += "\n";
  out += "k,primal_updates,squared_error,disagreement,algorithm,seed\n";
  for (const MetricsRecord& r : records) {
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.primal_updates);
    out += ',';
    out += format_double(r.squared_error);
    out += ',';
    out += format_double(r.disagreement);
    out += ',';
    out += r.algorithm;
    out += ',';
    out += std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "median of an empty sample");
  }
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<SummaryRow> summarize(const std::vector<SweepResult>& runs) {
  // group runs by algorithm, preserving first-appearance order
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SweepResult*>> grouped;
  for (const SweepResult& run : runs) {
    const std::string label = to_string(run.job.algorithm);
    if (grouped.find(label) == grouped.end()) order.push_back(label);
    grouped[label].push_back(&run);
  }

  std::vector<SummaryRow> rows;
  for (const std::string& label : order) {
    const auto& group = grouped[label];
    const size_t record_count = group.front()->records.size();
    for (const SweepResult* run : group) {
      if (run->records.size() != record_count) {
        throw Error(ErrorCode::ShapeMismatch,
                    "runs of '" + label + "' have mismatched record layouts");
      }
    }
    for (size_t j = 0; j < record_count; ++j) {
      std::vector<double> errors;
      std::vector<double> updates;
      errors.reserve(group.size());
      updates.reserve(group.size());
      for (const SweepResult* run : group) {
        errors.push_back(run->records[j].squared_error);
        updates.push_back(static_cast<double>(run->records[j].primal_updates));
      }
      rows.push_back(SummaryRow{label,
                                static_cast<std::int64_t>(median(std::move(updates))),
                                median(std::move(errors))});
    }
  }
  return rows;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "algorithm,primal_updates,median_squared_error\n";
  for (const SummaryRow& r : rows) {
    out += r.algorithm;
    out += ',';
    out += std::to_string(r.primal_updates);
    out += ',';
    out += format_double(r.median_squared_error);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw Error(ErrorCode::ConfigInvalid, "cannot write " + tmp.string());
    }
    stream.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace randprox
