#include "debtlab/econ/var.hpp"

#include <cmath>
#include <stdexcept>

namespace debtlab {

VarFit var1_fit(const std::vector<std::vector<double>>& series) {
    const long m = static_cast<long>(series.size());
    if (m == 0) throw std::invalid_argument("var1_fit: no series");
    const long t_total = static_cast<long>(series.front().size());
    for (const auto& s : series)
        if (static_cast<long>(s.size()) != t_total)
            throw std::invalid_argument("var1_fit: unequal series lengths");
    const long t_eff = t_total - 1;
    if (t_eff <= m + 1) throw std::invalid_argument("var1_fit: series too short");

    Eigen::MatrixXd X(t_eff, m);
    Eigen::MatrixXd Y(t_eff, m);
    for (long j = 0; j < m; ++j)
        for (long t = 0; t < t_eff; ++t) {
            X(t, j) = series[static_cast<size_t>(j)][static_cast<size_t>(t)];
            Y(t, j) = series[static_cast<size_t>(j)][static_cast<size_t>(t + 1)];
        }

    VarFit fit;
    fit.n = t_eff;
    fit.lag_coef.resize(m, m);
    fit.lag_se.resize(m, m);
    fit.intercept.resize(m);
    fit.intercept_se.resize(m);
    fit.resid.resize(t_eff, m);

    for (long eq = 0; eq < m; ++eq) {
        const RegressionResult r = ols(Y.col(eq), X, true);
        fit.intercept(eq) = r.coef(0);
        fit.intercept_se(eq) = r.se(0);
        for (long j = 0; j < m; ++j) {
            fit.lag_coef(eq, j) = r.coef(j + 1);
            fit.lag_se(eq, j) = r.se(j + 1);
        }
        fit.resid.col(eq) = r.resid;
    }

    const double dof = static_cast<double>(t_eff - (m + 1));
    fit.resid_cov = fit.resid.transpose() * fit.resid / dof;
    return fit;
}

IrfFevd var_irf_fevd(const VarFit& fit, int horizon) {
    if (horizon < 1) throw std::invalid_argument("var_irf_fevd: horizon < 1");
    const long m = fit.lag_coef.rows();

    Eigen::LLT<Eigen::MatrixXd> llt(fit.resid_cov);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("var_irf_fevd: residual covariance not positive definite");
    const Eigen::MatrixXd P = llt.matrixL();

    IrfFevd out;
    Eigen::MatrixXd a_pow = Eigen::MatrixXd::Identity(m, m);
    Eigen::MatrixXd cum = Eigen::MatrixXd::Zero(m, m);
    Eigen::MatrixXd mse = Eigen::MatrixXd::Zero(m, m); // accumulated squared irf
    for (int h = 0; h < horizon; ++h) {
        const Eigen::MatrixXd psi = a_pow * P;
        out.irf.push_back(psi);
        cum += psi;
        out.cumulative_irf.push_back(cum);
        mse += psi.cwiseProduct(psi);
        a_pow = fit.lag_coef * a_pow;
    }

    out.fevd.resize(m, m);
    for (long i = 0; i < m; ++i) {
        const double total = mse.row(i).sum();
        for (long j = 0; j < m; ++j)
            out.fevd(i, j) = total > 0.0 ? mse(i, j) / total : 0.0;
    }
    return out;
}

} // namespace debtlab
