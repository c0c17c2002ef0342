#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "randprox/experiment.hpp"
#include "randprox/svg.hpp"
#include "randprox/trace.hpp"

using namespace randprox;

namespace {

std::vector<MetricsRecord> sample_records() {
  std::vector<MetricsRecord> records;
  for (int k = 0; k <= 3; ++k) {
    MetricsRecord r;
    r.k = k * 10;
    r.primal_updates = k * 20;
    r.squared_error = std::pow(10.0, -k);
    r.disagreement = 0.5 * r.squared_error;
    r.algorithm = "async-admm";
    r.seed = 7;
    records.push_back(r);
  }
  return records;
}

}  // namespace

TEST_CASE("trace CSV layout") {
  const std::string csv = trace_to_csv(sample_records());
  std::istringstream lines(csv);
  std::string line;

  std::getline(lines, line);
  CHECK(line == "# rng=splitmix64");
  std::getline(lines, line);
  CHECK(line == "k,primal_updates,squared_error,disagreement,algorithm,seed");
  std::getline(lines, line);
  CHECK(line == "0,0,1,0.5,async-admm,7");
  std::getline(lines, line);
  CHECK(line == "10,20,0.10000000000000001,0.050000000000000003,async-admm,7");
}

TEST_CASE("doubles serialize with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_double(45.0) == "45");

  // 17 digits are enough to round-trip any double exactly
  std::uint64_t bits = 0x243F6A8885A308D3ULL;  // arbitrary but fixed
  for (int trial = 0; trial < 1000; ++trial) {
    bits = bits * 6364136223846793005ULL + 1442695040888963407ULL;
    double value;
    std::memcpy(&value, &bits, sizeof(value));
    if (!std::isfinite(value)) continue;
    CHECK(std::strtod(format_double(value).c_str(), nullptr) == value);
  }
}

TEST_CASE("median") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK(median({5.0}) == 5.0);
  CHECK_THROWS_AS(median({}), Error);
}

TEST_CASE("summaries take medians across seeds at each checkpoint") {
  std::vector<SweepResult> runs;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    SweepResult run;
    run.job = {Algorithm::AsyncAdmm, seed};
    for (int j = 0; j < 2; ++j) {
      MetricsRecord r;
      r.k = j;
      r.primal_updates = 2 * j;
      r.squared_error = static_cast<double>(seed + j);
      r.algorithm = "async-admm";
      r.seed = seed;
      run.records.push_back(r);
    }
    runs.push_back(run);
  }
  const auto rows = summarize(runs);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].algorithm == "async-admm");
  CHECK(rows[0].primal_updates == 0);
  CHECK(rows[0].median_squared_error == 2.0);  // median of 1,2,3
  CHECK(rows[1].primal_updates == 2);
  CHECK(rows[1].median_squared_error == 3.0);  // median of 2,3,4

  const std::string csv = summary_to_csv(rows);
  CHECK(csv.rfind("algorithm,primal_updates,median_squared_error\n", 0) == 0);
  CHECK(csv.find("async-admm,0,2\n") != std::string::npos);

  // runs with mismatched record layouts cannot be summarized
  runs[1].records.pop_back();
  CHECK_THROWS_AS(summarize(runs), Error);
}

TEST_CASE("atomic file writes land complete") {
  const auto dir = std::filesystem::temp_directory_path() / "randprox-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "trace.csv";
  write_file_atomic(path, "hello\n");
  std::ifstream in(path);
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == "hello\n");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg rendering") {
  const auto records = sample_records();
  const std::string svg = render_convergence_svg({to_series(records)});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("async-admm") != std::string::npos);
  CHECK(svg.find("primal updates") != std::string::npos);
  CHECK(svg.find("squared error") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  // a pure function of its input
  CHECK(render_convergence_svg({to_series(records)}) == svg);

  // zero errors survive the log axis
  auto zeroed = records;
  zeroed[3].squared_error = 0.0;
  const std::string clamped = render_convergence_svg({to_series(zeroed)});
  CHECK(clamped.find("nan") == std::string::npos);
  CHECK(clamped.find("inf") == std::string::npos);
}
