#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace debtlab {

struct RankDeficiencyError : std::runtime_error {
    int column;
    explicit RankDeficiencyError(int col)
        : std::runtime_error("ols: design matrix is rank deficient at column " +
                             std::to_string(col)),
          column(col) {}
};

struct RegressionResult {
    Eigen::VectorXd coef;
    Eigen::VectorXd se;        // classical, dof-corrected
    Eigen::MatrixXd cov;       // classical covariance
    Eigen::VectorXd robust_se; // filled by hac_se / hc3_se
    std::string robust_flavor; // "classical", "HAC(maxlags=k)" or "HC3"
    Eigen::VectorXd resid;
    Eigen::MatrixXd design;    // including the intercept column if present
    double r2 = 0.0;
    bool uncentered_r2 = false; // true for no-intercept fits
    double rss = 0.0;
    double sigma2 = 0.0;       // rss/(n-k)
    long n = 0;
    long k = 0;
    bool has_intercept = false;
};

// Least squares of y on X; an intercept column is prepended when asked.
// Coefficients are ordered [intercept, X columns...].
RegressionResult ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                     bool intercept = true);

// Newey-West (Bartlett kernel) standard errors; maxlags = 0 is the plain
// heteroskedasticity-only (HC0) sandwich. Returns the SE vector and tags
// the result.
Eigen::VectorXd hac_se(RegressionResult& result, int maxlags);

// HC3 small-sample heteroskedasticity-robust standard errors.
Eigen::VectorXd hc3_se(RegressionResult& result);

// Convenience builders.
Eigen::VectorXd to_eigen(const std::vector<double>& v);
Eigen::MatrixXd column_matrix(const std::vector<std::vector<double>>& cols);

} // namespace debtlab
