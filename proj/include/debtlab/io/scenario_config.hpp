#pragma once

#include "debtlab/core_model.hpp"
#include "debtlab/scenario.hpp"

#include <map>
#include <string>

namespace debtlab {

// Plain-text key-value config. Sections in brackets; '#' starts a comment.
//
//   [calibration]
//   b0 = 2.40
//   r_n = 0.022
//
//   [scenario B]
//   horizon = 4
//   rate_hike = 0.005        # scalar broadcast or comma list
//   delta_e = -10
//   pi_mode = fixed          # fixed | passthrough | exogenous
//   pi = 0.027
//   deficit_mode = ioer      # fixed | ioer
//   ioer_alpha_pt = 1.0
//   lead_in_years = 1
struct ScenarioConfig {
    Calibration calibration;
    std::map<std::string, ScenarioSpec> scenarios;
};

ScenarioConfig load_scenario_config(const std::string& path);

// The built-in canonical experiment set (used when no config is given).
ScenarioConfig builtin_config();

} // namespace debtlab
