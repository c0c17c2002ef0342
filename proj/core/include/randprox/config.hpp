#pragma once

#include <filesystem>
#include <string>

#include "randprox/experiment.hpp"

namespace randprox {

/// Parses a JSON experiment description. Throws CONFIG_INVALID with the
/// offending field path on schema violations.
ExperimentConfig parse_config_json(const std::string& text);

ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Canonical JSON form of a config; parse_config_json round-trips it.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace randprox
