#pragma once

#include "debtlab/econ/linreg.hpp"

#include <optional>
#include <vector>

namespace debtlab {

struct QeControls {
    std::vector<double> qe_level; // country asset-purchase dummy or level
};

struct PlaceboResult {
    double beta_free = 0.0;    // slope on the US rate in the free regime
    double se_free = 0.0;      // HAC
    double beta_captive = 0.0; // beta_free + interaction
    double beta_interaction = 0.0;
    double se_interaction = 0.0;
    double wald_p = 1.0;       // H0: interaction = 0, HAC t-test
    bool interaction_dropped = false; // dummy never varies
    RegressionResult fit;
};

// r_country = a + beta_free r_us + beta_I (r_us x captive) + delta captive
// [+ QE level + r_us x QE], HAC(maxlags = 3) errors.
PlaceboResult placebo_interacted(const std::vector<double>& country_rate,
                                 const std::vector<double>& us_rate,
                                 const std::vector<double>& captive_dummy,
                                 const std::optional<QeControls>& qe = std::nullopt);

} // namespace debtlab
