#pragma once

#include "debtlab/econ/linreg.hpp"

#include <vector>

namespace debtlab {

// Logistic smooth-transition regression
//   y = a + [b1 + b2 * G(x; gamma, c)] * x,  G = 1/(1 + exp(-gamma (x - c)))
// estimated by profiled least squares: a coarse (gamma, c) grid followed by
// a Nelder-Mead refinement, gamma clamped to [0.1, 50].
struct LstarResult {
    double gamma = 0.0;
    double c = 0.0;
    Eigen::VectorXd coef;       // [a, b1, b2]
    double r2_linear = 0.0;
    double r2_lstar = 0.0;
    double delta_r2 = 0.0;
    bool converged = true;      // false: best grid point reported
    RegressionResult linear_fit;
};

inline constexpr double kLstarGammaMin = 0.1;
inline constexpr double kLstarGammaMax = 50.0;

LstarResult lstar_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace debtlab
