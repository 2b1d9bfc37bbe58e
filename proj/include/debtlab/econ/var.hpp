#pragma once

#include "debtlab/econ/linreg.hpp"

#include <vector>

namespace debtlab {

// First-order VAR on m jointly observed series, one equation per variable
// with a constant and all lagged levels as regressors.
struct VarFit {
    Eigen::MatrixXd lag_coef;   // m x m, row = equation, col = lagged variable
    Eigen::VectorXd intercept;  // m
    Eigen::MatrixXd lag_se;     // classical SEs, same layout as lag_coef
    Eigen::VectorXd intercept_se;
    Eigen::MatrixXd resid_cov;  // dof-corrected residual covariance
    Eigen::MatrixXd resid;      // T x m
    long n = 0;                 // effective observations per equation
};

VarFit var1_fit(const std::vector<std::vector<double>>& series);

struct IrfFevd {
    // irf[h] is m x m: response of variable i to an orthogonalized
    // one-standard-deviation shock in variable j, h periods out.
    std::vector<Eigen::MatrixXd> irf;
    std::vector<Eigen::MatrixXd> cumulative_irf;
    // fevd(i, j): share of variable i's forecast-error variance at the
    // requested horizon attributable to shock j. Rows sum to one.
    Eigen::MatrixXd fevd;
};

// Orthogonalization is a lower-triangular Cholesky factor in the order the
// series were supplied; the horizon-H FEVD accumulates steps 0..H-1.
IrfFevd var_irf_fevd(const VarFit& fit, int horizon);

} // namespace debtlab
