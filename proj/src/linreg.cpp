#include "debtlab/econ/linreg.hpp"

#include <cmath>

namespace debtlab {

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<long>(v.size()));
}

Eigen::MatrixXd column_matrix(const std::vector<std::vector<double>>& cols) {
    if (cols.empty()) return {};
    const long n = static_cast<long>(cols.front().size());
    Eigen::MatrixXd X(n, static_cast<long>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<long>(cols[j].size()) != n)
            throw std::invalid_argument("column_matrix: ragged columns");
        X.col(static_cast<long>(j)) = to_eigen(cols[j]);
    }
    return X;
}

RegressionResult ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                     bool intercept) {
    const long n = y.size();
    if (X.rows() != n) throw std::invalid_argument("ols: row mismatch");

    Eigen::MatrixXd D;
    if (intercept) {
        D.resize(n, X.cols() + 1);
        D.col(0).setOnes();
        if (X.cols() > 0) D.rightCols(X.cols()) = X;
    } else {
        D = X;
    }
    const long k = D.cols();
    if (n <= k) throw std::invalid_argument("ols: need more observations than regressors");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(D);
    // Column-scaled threshold on the R diagonal catches near-collinearity.
    const Eigen::VectorXd rdiag = qr.matrixR().diagonal().cwiseAbs();
    const double tol = rdiag.maxCoeff() * 1e-10 * static_cast<double>(n);
    if (qr.rank() < k || rdiag.minCoeff() <= tol) {
        const auto perm = qr.colsPermutation().indices();
        long bad = k - 1;
        for (long j = 0; j < k; ++j)
            if (rdiag(j) <= tol) { bad = j; break; }
        throw RankDeficiencyError(static_cast<int>(perm(bad)));
    }

    RegressionResult r;
    r.has_intercept = intercept;
    r.n = n;
    r.k = k;
    r.design = D;
    r.coef = qr.solve(y);
    r.resid = y - D * r.coef;
    r.rss = r.resid.squaredNorm();
    r.sigma2 = r.rss / static_cast<double>(n - k);

    const Eigen::MatrixXd xtx_inv =
        (D.transpose() * D).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    r.cov = r.sigma2 * xtx_inv;
    r.se = r.cov.diagonal().cwiseSqrt();
    r.robust_flavor = "classical";

    if (intercept) {
        const double tss = (y.array() - y.mean()).matrix().squaredNorm();
        r.r2 = tss > 0.0 ? 1.0 - r.rss / tss : 1.0;
    } else {
        const double tss = y.squaredNorm();
        r.r2 = tss > 0.0 ? 1.0 - r.rss / tss : 1.0;
        r.uncentered_r2 = true;
    }
    return r;
}

Eigen::VectorXd hac_se(RegressionResult& result, int maxlags) {
    if (maxlags < 0) throw std::invalid_argument("hac_se: maxlags < 0");
    const Eigen::MatrixXd& D = result.design;
    const long n = result.n, k = result.k;

    // Score matrix x_t * u_t, one row per observation.
    Eigen::MatrixXd S = D.array().colwise() * result.resid.array();

    Eigen::MatrixXd meat = S.transpose() * S; // lag 0
    for (int lag = 1; lag <= maxlags; ++lag) {
        if (lag >= n) break;
        const double w = 1.0 - static_cast<double>(lag) / (maxlags + 1.0);
        const Eigen::MatrixXd gamma =
            S.bottomRows(n - lag).transpose() * S.topRows(n - lag);
        meat += w * (gamma + gamma.transpose());
    }

    const Eigen::MatrixXd xtx_inv =
        (D.transpose() * D).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    const Eigen::MatrixXd V = xtx_inv * meat * xtx_inv;
    result.robust_se = V.diagonal().cwiseMax(0.0).cwiseSqrt();
    result.robust_flavor = "HAC(maxlags=" + std::to_string(maxlags) + ")";
    return result.robust_se;
}

Eigen::VectorXd hc3_se(RegressionResult& result) {
    const Eigen::MatrixXd& D = result.design;
    const long n = result.n, k = result.k;
    const Eigen::MatrixXd xtx_inv =
        (D.transpose() * D).ldlt().solve(Eigen::MatrixXd::Identity(k, k));

    Eigen::VectorXd lev(n);
    for (long i = 0; i < n; ++i) lev(i) = (D.row(i) * xtx_inv * D.row(i).transpose())(0);
    const Eigen::ArrayXd w =
        result.resid.array().square() / (1.0 - lev.array()).square();

    const Eigen::MatrixXd meat =
        D.transpose() * (D.array().colwise() * w).matrix();
    const Eigen::MatrixXd V = xtx_inv * meat * xtx_inv;
    result.robust_se = V.diagonal().cwiseMax(0.0).cwiseSqrt();
    result.robust_flavor = "HC3";
    return result.robust_se;
}

} // namespace debtlab
