#include "debtlab/econ/lstar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace debtlab {

namespace {

struct ProfileFit {
    double ssr = std::numeric_limits<double>::infinity();
    Eigen::VectorXd coef;
};

ProfileFit profile_ssr(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                       double gamma, double c) {
    const long n = x.size();
    Eigen::MatrixXd X(n, 2);
    X.col(0) = x;
    for (long i = 0; i < n; ++i) {
        const double g = 1.0 / (1.0 + std::exp(-gamma * (x(i) - c)));
        X(i, 1) = x(i) * g;
    }
    ProfileFit out;
    try {
        const RegressionResult r = ols(y, X, true);
        out.ssr = r.rss;
        out.coef = r.coef;
    } catch (const RankDeficiencyError&) {
        // degenerate transition (G constant over the sample); skip the cell
    }
    return out;
}

} // namespace

LstarResult lstar_fit(const std::vector<double>& xv, const std::vector<double>& yv) {
    if (xv.size() != yv.size()) throw std::invalid_argument("lstar_fit: size mismatch");
    if (xv.size() < 20) throw std::invalid_argument("lstar_fit: need at least 20 observations");

    const Eigen::VectorXd x = to_eigen(xv);
    const Eigen::VectorXd y = to_eigen(yv);

    LstarResult out;
    out.linear_fit = ols(y, x, true);
    out.r2_linear = out.linear_fit.r2;

    const double x_min = x.minCoeff(), x_max = x.maxCoeff();
    if (!(x_max > x_min)) throw std::invalid_argument("lstar_fit: constant regressor");

    // 50 x 50 grid: log-spaced slopes, linear locations over the data range.
    constexpr int kGrid = 50;
    double best_ssr = std::numeric_limits<double>::infinity();
    double best_gamma = kLstarGammaMin, best_c = 0.5 * (x_min + x_max);
    Eigen::VectorXd best_coef;
    const double lg0 = std::log(kLstarGammaMin), lg1 = std::log(kLstarGammaMax);
    for (int i = 0; i < kGrid; ++i) {
        const double gamma = std::exp(lg0 + (lg1 - lg0) * i / (kGrid - 1.0));
        for (int j = 0; j < kGrid; ++j) {
            const double c = x_min + (x_max - x_min) * j / (kGrid - 1.0);
            const ProfileFit f = profile_ssr(x, y, gamma, c);
            if (f.ssr < best_ssr) {
                best_ssr = f.ssr;
                best_gamma = gamma;
                best_c = c;
                best_coef = f.coef;
            }
        }
    }
    out.converged = std::isfinite(best_ssr);

    // Nelder-Mead on (gamma, c), gamma clamped to its bounds.
    auto objective = [&](double g, double c) {
        g = std::clamp(g, kLstarGammaMin, kLstarGammaMax);
        return profile_ssr(x, y, g, c).ssr;
    };
    if (out.converged) {
        const double c_step = std::max((x_max - x_min) / kGrid, 1e-8);
        double pg[3] = {best_gamma, best_gamma * 1.25, best_gamma};
        double pc[3] = {best_c, best_c, best_c + c_step};
        double fv[3];
        for (int i = 0; i < 3; ++i) fv[i] = objective(pg[i], pc[i]);
        for (int iter = 0; iter < 400; ++iter) {
            int lo = 0, hi = 0;
            for (int i = 1; i < 3; ++i) {
                if (fv[i] < fv[lo]) lo = i;
                if (fv[i] > fv[hi]) hi = i;
            }
            if (std::abs(fv[hi] - fv[lo]) <= 1e-14 * (1.0 + std::abs(fv[lo]))) break;
            const double cg = (pg[0] + pg[1] + pg[2] - pg[hi]) / 2.0;
            const double cc = (pc[0] + pc[1] + pc[2] - pc[hi]) / 2.0;
            double rg = cg + (cg - pg[hi]), rc = cc + (cc - pc[hi]);
            double fr = objective(rg, rc);
            if (fr < fv[lo]) {
                const double eg = cg + 2.0 * (cg - pg[hi]), ec = cc + 2.0 * (cc - pc[hi]);
                const double fe = objective(eg, ec);
                if (fe < fr) { rg = eg; rc = ec; fr = fe; }
                pg[hi] = rg; pc[hi] = rc; fv[hi] = fr;
            } else if (fr < fv[hi]) {
                pg[hi] = rg; pc[hi] = rc; fv[hi] = fr;
            } else {
                const double sg = cg + 0.5 * (pg[hi] - cg), sc = cc + 0.5 * (pc[hi] - cc);
                const double fs = objective(sg, sc);
                if (fs < fv[hi]) {
                    pg[hi] = sg; pc[hi] = sc; fv[hi] = fs;
                } else {
                    for (int i = 0; i < 3; ++i) {
                        if (i == lo) continue;
                        pg[i] = pg[lo] + 0.5 * (pg[i] - pg[lo]);
                        pc[i] = pc[lo] + 0.5 * (pc[i] - pc[lo]);
                        fv[i] = objective(pg[i], pc[i]);
                    }
                }
            }
        }
        int lo = 0;
        for (int i = 1; i < 3; ++i)
            if (fv[i] < fv[lo]) lo = i;
        if (fv[lo] < best_ssr) {
            best_gamma = std::clamp(pg[lo], kLstarGammaMin, kLstarGammaMax);
            best_c = pc[lo];
            const ProfileFit f = profile_ssr(x, y, best_gamma, best_c);
            best_ssr = f.ssr;
            best_coef = f.coef;
        }
    }

    out.gamma = best_gamma;
    out.c = best_c;
    out.coef = best_coef;
    const double tss = (y.array() - y.mean()).matrix().squaredNorm();
    out.r2_lstar = (out.converged && tss > 0.0) ? 1.0 - best_ssr / tss : out.r2_linear;
    out.delta_r2 = out.r2_lstar - out.r2_linear;
    return out;
}

} // namespace debtlab
