#pragma once

#include "debtlab/econ/linreg.hpp"

#include <vector>

namespace debtlab {

struct LpHorizon {
    int h = 0;
    long n = 0;
    // Coefficient order matches the regression: [const, shocks..., controls...]
    Eigen::VectorXd coef;
    Eigen::VectorXd hac_se;
    RegressionResult fit;
};

struct LpResult {
    std::vector<LpHorizon> horizons;
    bool truncated = false; // requested horizons dropped for lack of sample
    int requested_h = 0;
};

// Direct multi-horizon projections: for each h, regress
// response[t+h] - response[t-1] on the shocks and controls dated t, with
// Newey-West standard errors at maxlags = h. All inputs share the same time
// index; estimation starts at first_t (>= 1 so the t-1 base exists).
LpResult local_projections(const std::vector<double>& response,
                           const std::vector<std::vector<double>>& shocks,
                           const std::vector<std::vector<double>>& controls,
                           int max_horizon, int first_t = 1);

} // namespace debtlab
