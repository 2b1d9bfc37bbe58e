#pragma once

#include "debtlab/econ/linreg.hpp"

#include <string>
#include <vector>

namespace debtlab {

struct ArdlBoundsResult {
    RegressionResult ecm;       // [const, levels..., short-run...]
    double f = 0.0;             // joint F on the level terms
    double df2 = 0.0;
    std::string decision;       // "no cointegration" | "inconclusive" | "cointegration"
    // Long-run ratios -level_i / adjustment with delta-method SEs; only
    // meaningful when identified.
    std::vector<double> long_run;
    std::vector<double> long_run_se;
    bool long_run_identified = false;
};

// ECM of dy on lagged levels plus short-run terms, with the Pesaran-Shin-
// Smith bounds F-test on the joint significance of the level terms.
// Critical bounds are the tabulated Case III, k = 2 values.
ArdlBoundsResult ardl_bounds(const std::vector<double>& dy,
                             const std::vector<std::vector<double>>& levels,
                             const std::vector<std::vector<double>>& short_run);

struct ArdlBound {
    double level;  // significance (0.10, 0.05, 0.01)
    double lower;
    double upper;
};

const std::vector<ArdlBound>& ardl_case3_k2_bounds();

} // namespace debtlab
