#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "debtlab/econ/ardl.hpp"
#include "debtlab/econ/distributions.hpp"
#include "debtlab/econ/fair_tests.hpp"
#include "debtlab/econ/local_projections.hpp"
#include "debtlab/econ/lstar.hpp"
#include "debtlab/econ/placebo.hpp"
#include "debtlab/econ/stat_tests.hpp"
#include "debtlab/econ/var.hpp"

#include <cmath>
#include <random>

using namespace debtlab;

TEST_CASE("distribution functions against reference values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
    CHECK(normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-5));
    CHECK(student_t_cdf(2.085963, 20) == doctest::Approx(0.975).epsilon(1e-5));
    CHECK(t_test_pvalue(2.085963, 20) == doctest::Approx(0.05).epsilon(1e-4));
    CHECK(f_cdf(4.964603, 1, 10) == doctest::Approx(0.95).epsilon(1e-5));
    CHECK(f_test_pvalue(4.964603, 1, 10) == doctest::Approx(0.05).epsilon(1e-4));
    // F(1,df) equals t(df)^2
    CHECK(f_test_pvalue(2.5 * 2.5, 1, 14) ==
          doctest::Approx(t_test_pvalue(2.5, 14)).epsilon(1e-10));
}

TEST_CASE("ols on an exact line") {
    std::vector<double> x, y;
    for (int i = 0; i < 10; ++i) {
        x.push_back(i);
        y.push_back(2.0 + 3.0 * i);
    }
    const RegressionResult r = ols(to_eigen(y), column_matrix({x}), true);
    CHECK(r.coef(0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.coef(1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.robust_flavor == "classical");
    CHECK_FALSE(r.uncentered_r2);
}

TEST_CASE("ols residuals are orthogonal to every regressor") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n(0.0, 1.0);
    const int rows = 60;
    std::vector<double> x1(rows), x2(rows), y(rows);
    for (int i = 0; i < rows; ++i) {
        x1[i] = n(rng);
        x2[i] = n(rng);
        y[i] = 1.0 + 0.5 * x1[i] - 0.7 * x2[i] + n(rng);
    }
    RegressionResult r = ols(to_eigen(y), column_matrix({x1, x2}), true);
    const Eigen::VectorXd dots = r.design.transpose() * r.resid;
    const double scale = r.resid.norm() * r.design.norm();
    for (long j = 0; j < dots.size(); ++j) CHECK(std::abs(dots(j)) < 1e-8 * scale);
}

TEST_CASE("ols reports the offending column when rank deficient") {
    std::vector<double> x1 = {1, 2, 3, 4, 5, 6};
    std::vector<double> x2 = {2, 4, 6, 8, 10, 12}; // 2 * x1
    std::vector<double> y = {1, 2, 2, 3, 4, 4};
    try {
        ols(to_eigen(y), column_matrix({x1, x2}), true);
        FAIL("expected RankDeficiencyError");
    } catch (const RankDeficiencyError& e) {
        CHECK(e.column >= 1); // one of the collinear pair, never the intercept
        CHECK(e.column <= 2);
    }
    CHECK_THROWS_AS(ols(to_eigen(std::vector<double>{1, 2}),
                        column_matrix({{1.0, 2.0}, {1.0, 3.0}}), true),
                    std::invalid_argument); // n <= k
}

TEST_CASE("no-intercept fits are flagged as uncentered") {
    std::vector<double> x = {1, 2, 3, 4, 5};
    std::vector<double> y = {2, 4, 6, 8, 10};
    const RegressionResult r = ols(to_eigen(y), column_matrix({x}), false);
    CHECK(r.uncentered_r2);
    CHECK(r.coef(0) == doctest::Approx(2.0));
}

TEST_CASE("hac with zero lags equals the plain sandwich exactly") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> n(0.0, 1.0);
    const int rows = 40;
    std::vector<double> x(rows), y(rows);
    for (int i = 0; i < rows; ++i) {
        x[i] = n(rng);
        y[i] = 0.3 * x[i] + n(rng) * (1.0 + 0.5 * std::abs(x[i]));
    }
    RegressionResult r = ols(to_eigen(y), column_matrix({x}), true);
    const Eigen::VectorXd h0 = hac_se(r, 0);
    CHECK(r.robust_flavor == "HAC(maxlags=0)");

    // independent HC0 computation
    const Eigen::MatrixXd D = r.design;
    const Eigen::MatrixXd xtx_inv =
        (D.transpose() * D).inverse();
    Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(D.cols(), D.cols());
    for (long i = 0; i < D.rows(); ++i)
        meat += r.resid(i) * r.resid(i) * D.row(i).transpose() * D.row(i);
    const Eigen::VectorXd ref = (xtx_inv * meat * xtx_inv).diagonal().cwiseSqrt();
    for (long j = 0; j < h0.size(); ++j)
        CHECK(h0(j) == doctest::Approx(ref(j)).epsilon(1e-10));

    for (long j = 0; j < h0.size(); ++j) CHECK(h0(j) >= 0.0);
    CHECK_THROWS_AS(hac_se(r, -1), std::invalid_argument);
}

TEST_CASE("welch t-test") {
    const std::vector<double> a = {1.0, 2.0, 3.0, 4.0};
    const WelchResult same = welch_ttest(a, a);
    CHECK(same.t == doctest::Approx(0.0));
    CHECK(same.p == doctest::Approx(1.0));
    CHECK(same.diff == doctest::Approx(0.0));

    const std::vector<double> b = {5.0, 6.0, 7.0, 8.0};
    const WelchResult shift = welch_ttest(a, b);
    CHECK(shift.diff == doctest::Approx(4.0));
    CHECK(shift.p < 0.01);
    CHECK(shift.sd_a == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("chow test on duplicated identical regimes") {
    std::vector<double> x, y;
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n(0.0, 0.5);
    for (int i = 0; i < 12; ++i) {
        x.push_back(i * 0.3);
        y.push_back(1.0 + 2.0 * x.back() + n(rng));
    }
    // identical second regime: pooled fit equals both subsample fits
    std::vector<double> x2 = x, y2 = y;
    x2.insert(x2.end(), x.begin(), x.end());
    y2.insert(y2.end(), y.begin(), y.end());
    const ChowResult c = chow_test(y2, x2, 12);
    CHECK(c.f == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(c.p == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(chow_test(y2, x2, 2), std::invalid_argument);
}

TEST_CASE("adf p-value response surface") {
    CHECK(adf_pvalue_from_stat(-1.90) == doctest::Approx(0.3321).epsilon(1e-3));
    CHECK(adf_pvalue_from_stat(-1.62) == doctest::Approx(0.4727).epsilon(1e-3));
    CHECK(adf_pvalue_from_stat(-3.50) == doctest::Approx(0.0080).epsilon(2e-2));
    CHECK(adf_pvalue_from_stat(3.0) == 1.0);
    CHECK(adf_pvalue_from_stat(-20.0) == 0.0);
}

TEST_CASE("var on a deterministic stable system") {
    // y_t = A y_{t-1} + c with tiny noise: recover A and c closely
    const Eigen::Matrix2d A = (Eigen::Matrix2d() << 0.5, 0.1, -0.2, 0.3).finished();
    const Eigen::Vector2d c(0.4, -0.1);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n(0.0, 1e-4);
    std::vector<std::vector<double>> series(2);
    Eigen::Vector2d y(0.0, 0.0);
    for (int t = 0; t < 600; ++t) {
        y = A * y + c + Eigen::Vector2d(n(rng), n(rng));
        series[0].push_back(y(0));
        series[1].push_back(y(1));
    }
    const VarFit fit = var1_fit(series);
    for (int i = 0; i < 2; ++i) {
        CHECK(fit.intercept(i) == doctest::Approx(c(i)).epsilon(0.02));
        for (int j = 0; j < 2; ++j)
            CHECK(fit.lag_coef(i, j) == doctest::Approx(A(i, j)).epsilon(0.05));
    }
}

TEST_CASE("fevd of a diagonal zero-dynamics system is impulse-only") {
    VarFit fit;
    fit.lag_coef = Eigen::Matrix3d::Zero();
    fit.intercept = Eigen::Vector3d::Zero();
    fit.resid_cov = (Eigen::Vector3d(0.4, 1.3, 2.2)).asDiagonal();
    fit.n = 100;
    const IrfFevd dyn = var_irf_fevd(fit, 6);
    for (int i = 0; i < 3; ++i) {
        CHECK(dyn.fevd(i, i) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dyn.fevd.row(i).sum() == doctest::Approx(1.0).epsilon(1e-10));
    }
    // IRFs beyond impact are zero
    for (int h = 1; h < 6; ++h) CHECK(dyn.irf[h].norm() == doctest::Approx(0.0));

    fit.resid_cov(0, 0) = -1.0; // not positive definite
    CHECK_THROWS_AS(var_irf_fevd(fit, 3), std::runtime_error);
}

TEST_CASE("ardl critical bounds table") {
    const auto& b = ardl_case3_k2_bounds();
    REQUIRE(b.size() == 3);
    CHECK(b[0].lower == 3.17);
    CHECK(b[0].upper == 4.14);
    CHECK(b[1].lower == 3.79);
    CHECK(b[1].upper == 4.85);
    CHECK(b[2].lower == 5.15);
    CHECK(b[2].upper == 6.36);
}

TEST_CASE("local projections: h = 0 equals the contemporaneous regression") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> n(0.0, 1.0);
    const int t_len = 40;
    std::vector<double> b(t_len), shock(t_len);
    double level = 100.0;
    for (int t = 0; t < t_len; ++t) {
        shock[t] = n(rng);
        level += 0.8 * shock[t] + 0.3 * n(rng);
        b[t] = level;
    }
    const LpResult lp = local_projections(b, {shock}, {}, 3, 1);
    REQUIRE(!lp.horizons.empty());
    // direct regression of b_t - b_{t-1} on the shock
    std::vector<double> y, x;
    for (int t = 1; t < t_len; ++t) {
        y.push_back(b[t] - b[t - 1]);
        x.push_back(shock[t]);
    }
    const RegressionResult direct = ols(to_eigen(y), column_matrix({x}), true);
    CHECK(lp.horizons[0].coef(1) == doctest::Approx(direct.coef(1)).epsilon(1e-12));

    // truncation is reported when the sample cannot support the horizon
    std::vector<double> short_b(12), short_shock(12);
    for (int t = 0; t < 12; ++t) {
        short_shock[t] = n(rng);
        short_b[t] = t + 0.5 * short_shock[t];
    }
    const LpResult trunc = local_projections(short_b, {short_shock}, {}, 11, 1);
    CHECK(trunc.truncated);
    CHECK(trunc.horizons.size() < 12);
}

TEST_CASE("lstar input validation and linear data") {
    std::vector<double> x, y;
    for (int i = 0; i < 60; ++i) {
        x.push_back(i * 0.1 - 3.0);
        y.push_back(0.7 + 0.4 * x.back());
    }
    const LstarResult r = lstar_fit(x, y);
    CHECK(r.delta_r2 >= -1e-9);
    CHECK(r.delta_r2 < 1e-6); // nothing to gain on an exact line
    CHECK(r.gamma >= kLstarGammaMin);
    CHECK(r.gamma <= kLstarGammaMax);
    CHECK_THROWS_AS(lstar_fit({1, 2, 3}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("placebo regression with an inactive dummy") {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> n(0.0, 0.3);
    std::vector<double> us(30), rate(30), captive(30, 0.0);
    for (int i = 0; i < 30; ++i) {
        us[i] = 2.0 + n(rng);
        rate[i] = 0.5 + 0.9 * us[i] + n(rng);
    }
    const PlaceboResult r = placebo_interacted(rate, us, captive);
    CHECK(r.interaction_dropped);
    CHECK(r.beta_captive == doctest::Approx(r.beta_free));
    CHECK(r.beta_free == doctest::Approx(0.9).epsilon(0.2));
}

TEST_CASE("k4 marks short periods as insufficient") {
    std::vector<double> spread(24), us(24);
    std::vector<int> period(24, 0);
    std::mt19937_64 rng(31);
    std::normal_distribution<double> n(0.0, 0.4);
    for (int i = 0; i < 24; ++i) {
        us[i] = 2.0 + 0.1 * i;
        spread[i] = 1.0 - 0.2 * us[i] + n(rng);
        period[i] = i < 18 ? 0 : (i < 21 ? 1 : 2);
    }
    const K4Result r = k4_insulation(spread, us, period, {"pre", "mid", "late"});
    CHECK(r.periods[0].sufficient);
    CHECK_FALSE(r.periods[1].sufficient);
    CHECK_FALSE(r.periods[2].sufficient);
}
