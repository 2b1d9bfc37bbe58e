#include "debtlab/econ/fair_tests.hpp"

#include "debtlab/econ/distributions.hpp"

#include <algorithm>
#include <cmath>

namespace debtlab {

namespace {

std::vector<double> drop_first(const std::vector<double>& v) {
    return {v.begin() + 1, v.end()};
}

std::vector<double> lag_of(const std::vector<double>& v) {
    return {v.begin(), v.end() - 1};
}

} // namespace

K1Result k1_captive_yield(const K1Data& japan, const std::vector<K1Placebo>& placebos,
                          const std::vector<double>& us_rate) {
    const std::vector<double> y = drop_first(japan.real_yield);
    const std::vector<double> lag_dep = lag_of(japan.real_yield);
    const std::vector<double> rus = drop_first(japan.us_rate);
    const std::vector<double> phi = drop_first(japan.phi_proxy);
    const std::vector<double> ycc = drop_first(japan.ycc_dummy);
    const std::vector<double> qqe = drop_first(japan.qqe_dummy);

    K1Result out;
    auto run = [&](const std::vector<std::vector<double>>& cols) {
        RegressionResult r = ols(to_eigen(y), column_matrix(cols), true);
        hac_se(r, 3);
        return r;
    };

    const RegressionResult m1 = run({rus, lag_dep});
    const RegressionResult m2 = run({rus, lag_dep, phi});
    const RegressionResult m3 = run({rus, lag_dep, phi, ycc, qqe});
    out.beta_rus_m1 = m1.coef(1);
    out.beta_rus_m2 = m2.coef(1);
    out.beta_rus_m3 = m3.coef(1);
    out.beta_phi_m2 = m2.coef(3);
    out.se_phi_m2 = m2.robust_se(3);
    out.beta_phi_m3 = m3.coef(3);
    out.se_phi_m3 = m3.robust_se(3);
    out.ycc_m3 = m3.coef(4);
    out.se_ycc_m3 = m3.robust_se(4);
    out.phi_negative = out.beta_phi_m2 < 0.0 && out.beta_phi_m3 < 0.0;

    for (const auto& p : placebos) {
        const std::vector<double> py = drop_first(p.real_yield);
        const std::vector<double> plag = lag_of(p.real_yield);
        const std::vector<double> pphi = drop_first(p.phi_proxy);
        const std::vector<double> prus = drop_first(us_rate);
        RegressionResult r = ols(to_eigen(py), column_matrix({prus, plag, pphi}), true);
        hac_se(r, 3);
        out.placebo_phi[p.country] = {r.coef(3), r.robust_se(3)};
    }
    return out;
}

K2Result k2_real_debt_lp(const std::vector<double>& real_debt_index,
                         const std::vector<double>& delta_e_pct,
                         const std::vector<double>& pi, double threshold_pct,
                         int max_horizon) {
    const size_t t_len = real_debt_index.size();
    if (delta_e_pct.size() != t_len || pi.size() != t_len)
        throw std::invalid_argument("k2_real_debt_lp: length mismatch");

    std::vector<double> treat(t_len, 0.0);
    K2Result out;
    for (size_t t = 0; t < t_len; ++t)
        if (delta_e_pct[t] > threshold_pct) {
            treat[t] = 1.0;
            out.treatment_years.push_back(static_cast<int>(t));
        }

    // Controls: lagged change in the index, lagged delta_e, inflation.
    std::vector<double> d_index(t_len, 0.0), lag_d_index(t_len, 0.0), lag_de(t_len, 0.0);
    for (size_t t = 1; t < t_len; ++t)
        d_index[t] = real_debt_index[t] - real_debt_index[t - 1];
    for (size_t t = 1; t < t_len; ++t) {
        lag_d_index[t] = d_index[t - 1];
        lag_de[t] = delta_e_pct[t - 1];
    }

    const LpResult lp = local_projections(real_debt_index, {treat},
                                          {lag_d_index, lag_de, pi}, max_horizon,
                                          /*first_t=*/2);
    bool confirmed = true;
    for (const auto& hz : lp.horizons) {
        // HAC(3) per the shared fair-test convention.
        RegressionResult f = hz.fit;
        hac_se(f, 3);
        out.beta.push_back(f.coef(1));
        out.se.push_back(f.robust_se(1));
        out.n.push_back(hz.n);
        if (hz.h >= 2 && f.coef(1) >= 0.0) confirmed = false;
    }
    out.confirmed = confirmed;
    return out;
}

K3Result k3_passthrough(const std::vector<double>& delta_e,
                        const std::vector<double>& delta_pi,
                        const std::vector<int>& regime, int n_bins) {
    const size_t n = delta_e.size();
    if (delta_pi.size() != n || regime.size() != n)
        throw std::invalid_argument("k3_passthrough: length mismatch");
    if (n_bins < 2) throw std::invalid_argument("k3_passthrough: need >= 2 bins");

    K3Result out;
    auto split_fit = [&](int which, double& beta, double& se, long& count) {
        std::vector<double> y, de, abs_de;
        for (size_t i = 0; i < n; ++i) {
            if (regime[i] != which) continue;
            y.push_back(delta_pi[i]);
            de.push_back(delta_e[i]);
            abs_de.push_back(std::abs(delta_e[i]));
        }
        RegressionResult r = ols(to_eigen(y), column_matrix({de, abs_de}), true);
        hac_se(r, 3);
        beta = r.coef(1);
        se = r.robust_se(1);
        count = r.n;
    };
    split_fit(0, out.beta_free, out.se_free, out.n_free);
    split_fit(1, out.beta_captive, out.se_captive, out.n_captive);
    out.split_confirmed = out.beta_captive > out.beta_free;

    // Pooled interaction with |de| quantile-bin fixed effects.
    std::vector<size_t> pooled;
    for (size_t i = 0; i < n; ++i)
        if (regime[i] == 0 || regime[i] == 1) pooled.push_back(i);
    std::vector<double> abs_sorted;
    abs_sorted.reserve(pooled.size());
    for (size_t i : pooled) abs_sorted.push_back(std::abs(delta_e[i]));
    std::sort(abs_sorted.begin(), abs_sorted.end());
    std::vector<double> cuts;
    for (int b = 1; b < n_bins; ++b)
        cuts.push_back(abs_sorted[abs_sorted.size() * b / n_bins]);

    const size_t np = pooled.size();
    std::vector<std::vector<double>> cols(static_cast<size_t>(n_bins) + 3,
                                          std::vector<double>(np, 0.0));
    std::vector<double> y(np);
    for (size_t r = 0; r < np; ++r) {
        const size_t i = pooled[r];
        y[r] = delta_pi[i];
        const double a = std::abs(delta_e[i]);
        int bin = 0;
        while (bin < n_bins - 1 && a >= cuts[static_cast<size_t>(bin)]) ++bin;
        cols[static_cast<size_t>(bin)][r] = 1.0; // bin dummy, no global intercept
        const double cap = regime[i] == 1 ? 1.0 : 0.0;
        cols[static_cast<size_t>(n_bins)][r] = delta_e[i];
        cols[static_cast<size_t>(n_bins) + 1][r] = delta_e[i] * cap;
        cols[static_cast<size_t>(n_bins) + 2][r] = cap;
    }
    RegressionResult pooled_fit = ols(to_eigen(y), column_matrix(cols), false);
    hac_se(pooled_fit, 3);
    out.beta_base = pooled_fit.coef(n_bins);
    out.se_base = pooled_fit.robust_se(n_bins);
    out.beta_interact = pooled_fit.coef(n_bins + 1);
    out.se_interact = pooled_fit.robust_se(n_bins + 1);
    out.interact_confirmed = out.beta_interact > 0.0;
    return out;
}

K4Result k4_insulation(const std::vector<double>& spread,
                       const std::vector<double>& us_rate,
                       const std::vector<int>& period,
                       const std::vector<std::string>& period_names) {
    const size_t n = spread.size();
    if (us_rate.size() != n || period.size() != n)
        throw std::invalid_argument("k4_insulation: length mismatch");

    K4Result out;
    for (size_t p = 0; p < period_names.size(); ++p) {
        std::vector<double> y, x;
        for (size_t i = 0; i < n; ++i) {
            if (period[i] != static_cast<int>(p)) continue;
            y.push_back(spread[i]);
            x.push_back(us_rate[i]);
        }
        K4Period row;
        row.name = period_names[p];
        row.n = static_cast<long>(y.size());
        row.sufficient = row.n >= 4;
        if (row.sufficient) {
            RegressionResult r = ols(to_eigen(y), column_matrix({x}), true);
            hc3_se(r);
            row.beta = r.coef(1);
            row.se = r.robust_se(1);
        }
        out.periods.push_back(row);
    }

    if (out.periods.size() >= 3 && out.periods[0].sufficient && out.periods[2].sufficient) {
        const auto& a = out.periods[0];
        const auto& b = out.periods[2];
        out.slope_diff_t = (a.beta - b.beta) / std::sqrt(a.se * a.se + b.se * b.se);
        out.slope_diff_p = 2.0 * normal_cdf(-std::abs(out.slope_diff_t));
    }
    return out;
}

} // namespace debtlab
