#pragma once

#include <string>

#include "json.hpp"

#include "isingecho/sweep.hpp"

// JSON sweep configuration.  Schema (unknown keys rejected):
//   N       int, required
//   J       number, default 1
//   a       number, default 1
//   delta   number, required
//   lambda  {min, max, step} or scalar number, required
//   time    {min, max, step}, required
//   grid    "paper" | "antiperiodic", default "paper"
//   outputs [{format: "csv"|"json"|"svg", path}], default []

namespace isingecho {

SweepConfig sweep_config_from_json(const nlohmann::json& j);
SweepConfig load_sweep_config(const std::string& path);
nlohmann::ordered_json sweep_config_to_json(const SweepConfig& cfg);

GridConvention grid_convention_from_string(const std::string& name);
std::string to_string(GridConvention conv);

}  // namespace isingecho
