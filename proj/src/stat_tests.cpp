#include "debtlab/econ/stat_tests.hpp"

#include "debtlab/econ/distributions.hpp"

#include <cmath>
#include <numeric>

namespace debtlab {

namespace {

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_var(const std::vector<double>& v, double m) {
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size() - 1);
}

} // namespace

WelchResult welch_ttest(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 2 || b.size() < 2)
        throw std::invalid_argument("welch_ttest: need at least two observations per sample");
    WelchResult r;
    r.mean_a = mean_of(a);
    r.mean_b = mean_of(b);
    const double va = sample_var(a, r.mean_a);
    const double vb = sample_var(b, r.mean_b);
    r.sd_a = std::sqrt(va);
    r.sd_b = std::sqrt(vb);
    r.diff = r.mean_b - r.mean_a;
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double se2 = va / na + vb / nb;
    if (se2 == 0.0) { // identical constant samples
        r.t = 0.0;
        r.p = 1.0;
        r.df = na + nb - 2.0;
        return r;
    }
    r.t = r.diff / std::sqrt(se2);
    r.df = se2 * se2 /
           (va * va / (na * na * (na - 1.0)) + vb * vb / (nb * nb * (nb - 1.0)));
    r.p = t_test_pvalue(r.t, r.df);
    return r;
}

ChowResult chow_test(const std::vector<double>& y, const std::vector<double>& x,
                     int break_index) {
    if (y.size() != x.size()) throw std::invalid_argument("chow_test: size mismatch");
    const long n = static_cast<long>(y.size());
    constexpr int kParams = 2;
    if (break_index < kParams + 1 || break_index > n - kParams - 1)
        throw std::invalid_argument("chow_test: subsample too small");

    auto fit = [](const std::vector<double>& yy, const std::vector<double>& xx) {
        return ols(to_eigen(yy), column_matrix({xx}), true);
    };
    ChowResult r;
    r.pooled = fit(y, x);
    r.regime1 = fit({y.begin(), y.begin() + break_index}, {x.begin(), x.begin() + break_index});
    r.regime2 = fit({y.begin() + break_index, y.end()}, {x.begin() + break_index, x.end()});

    const double rss_split = r.regime1.rss + r.regime2.rss;
    const double df2 = static_cast<double>(n - 2 * kParams);
    r.f = ((r.pooled.rss - rss_split) / kParams) / (rss_split / df2);
    if (r.f < 0.0) r.f = 0.0; // numerically exact splits
    r.p = f_test_pvalue(r.f, kParams, df2);
    return r;
}

namespace {

// MacKinnon response-surface constants, constant-only case, one variable
// (MacKinnon 1994; 2010 update as distributed with statsmodels).
constexpr double kTauStar = -1.61;
constexpr double kTauMin = -18.83;
constexpr double kTauMax = 2.74;
constexpr double kSmallP[3] = {2.1659, 1.4412, 0.038269};
constexpr double kLargeP[4] = {1.7339, 0.93202, -0.12745, -0.010368};

} // namespace

double adf_pvalue_from_stat(double tau) {
    if (tau >= kTauMax) return 1.0;
    if (tau <= kTauMin) return 0.0;
    double z;
    if (tau <= kTauStar) {
        z = kSmallP[0] + kSmallP[1] * tau + kSmallP[2] * tau * tau;
    } else {
        z = kLargeP[0] + kLargeP[1] * tau + kLargeP[2] * tau * tau +
            kLargeP[3] * tau * tau * tau;
    }
    return normal_cdf(z);
}

AdfResult adf_test(const std::vector<double>& series, int lags) {
    if (lags < 0) throw std::invalid_argument("adf_test: lags < 0");
    const long n = static_cast<long>(series.size());
    const long start = 1 + lags;
    const long t_obs = n - start;
    if (t_obs < 3 + lags) throw std::invalid_argument("adf_test: series too short");

    std::vector<double> dy(t_obs), y_lag(t_obs);
    std::vector<std::vector<double>> cols;
    cols.push_back({});
    for (long i = 0; i < t_obs; ++i) {
        const long t = start + i;
        dy[i] = series[t] - series[t - 1];
        y_lag[i] = series[t - 1];
    }
    cols[0] = y_lag;
    for (int l = 1; l <= lags; ++l) {
        std::vector<double> dlag(t_obs);
        for (long i = 0; i < t_obs; ++i) {
            const long t = start + i;
            dlag[i] = series[t - l] - series[t - l - 1];
        }
        cols.push_back(std::move(dlag));
    }

    const RegressionResult fit = ols(to_eigen(dy), column_matrix(cols), true);
    AdfResult r;
    r.lags = lags;
    r.n_used = t_obs;
    r.stat = fit.coef(1) / fit.se(1); // coefficient on the lagged level
    r.p = adf_pvalue_from_stat(r.stat);
    return r;
}

} // namespace debtlab
