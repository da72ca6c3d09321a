#pragma once

#include <string>

#include <json.hpp>

#include "jcas/experiment.hpp"

namespace jcas {

/// Parses the JSON experiment description. Angles are given in degrees in
/// the file and converted to radians here; powers are linear.
ExperimentConfig parse_config(const nlohmann::json& j);

/// Loads and parses a config file; throws config_error on I/O or schema problems.
ExperimentConfig load_config(const std::string& path);

/// Resolved-config echo for the run manifest (angles back in degrees).
nlohmann::json config_to_json(const ExperimentConfig& cfg);

} // namespace jcas
