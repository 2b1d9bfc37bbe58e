#include "debtlab/econ/ardl.hpp"

#include "debtlab/econ/distributions.hpp"

#include <cmath>

namespace debtlab {

const std::vector<ArdlBound>& ardl_case3_k2_bounds() {
    // Pesaran, Shin and Smith (2001), Table CI(iii), k = 2.
    static const std::vector<ArdlBound> bounds = {
        {0.10, 3.17, 4.14},
        {0.05, 3.79, 4.85},
        {0.01, 5.15, 6.36},
    };
    return bounds;
}

ArdlBoundsResult ardl_bounds(const std::vector<double>& dy,
                             const std::vector<std::vector<double>>& levels,
                             const std::vector<std::vector<double>>& short_run) {
    if (levels.empty()) throw std::invalid_argument("ardl_bounds: no level terms");
    std::vector<std::vector<double>> cols = levels;
    cols.insert(cols.end(), short_run.begin(), short_run.end());

    ArdlBoundsResult out;
    out.ecm = ols(to_eigen(dy), column_matrix(cols), true);

    // Restricted model drops every level term.
    const RegressionResult restricted =
        ols(to_eigen(dy), column_matrix(short_run), true);

    const long q = static_cast<long>(levels.size());
    out.df2 = static_cast<double>(out.ecm.n - out.ecm.k);
    out.f = ((restricted.rss - out.ecm.rss) / static_cast<double>(q)) /
            (out.ecm.rss / out.df2);

    const auto& bounds = ardl_case3_k2_bounds();
    const double lower10 = bounds[0].lower;
    double upper_at_best = bounds[0].upper;
    for (const auto& b : bounds)
        if (out.f > b.upper) upper_at_best = b.upper;
    if (out.f < lower10) {
        out.decision = "no cointegration";
    } else if (out.f > upper_at_best && out.f > bounds[0].upper) {
        out.decision = "cointegration";
    } else {
        out.decision = "inconclusive";
    }
    out.long_run_identified = out.f > bounds[0].upper;

    // Long-run ratios relative to the adjustment coefficient (first level
    // term): -level_i / alpha, delta-method SEs from the classical cov.
    const double alpha = out.ecm.coef(1);
    const double var_a = out.ecm.cov(1, 1);
    for (long i = 1; i < q; ++i) {
        const long idx = 1 + i;
        const double beta = out.ecm.coef(idx);
        const double var_b = out.ecm.cov(idx, idx);
        const double cov_ab = out.ecm.cov(1, idx);
        out.long_run.push_back(-beta / alpha);
        const double g1 = -1.0 / alpha;         // d/d beta
        const double g2 = beta / (alpha * alpha); // d/d alpha
        const double v = g1 * g1 * var_b + g2 * g2 * var_a + 2.0 * g1 * g2 * cov_ab;
        out.long_run_se.push_back(v > 0.0 ? std::sqrt(v) : 0.0);
    }
    return out;
}

} // namespace debtlab
