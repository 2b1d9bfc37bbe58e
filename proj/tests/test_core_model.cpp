#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "debtlab/core_model.hpp"

using namespace debtlab;

TEST_CASE("repression bias is the inflation-rate gap") {
    CHECK(repression_bias(0.027, 0.022) == doctest::Approx(0.005).epsilon(1e-12));
    CHECK(repression_bias(0.015, 0.022) == doctest::Approx(-0.007).epsilon(1e-12));
    CHECK(repression_bias(0.031, 0.031) == 0.0);
}

TEST_CASE("nominal growth: linear channel and one-sided penalty") {
    CHECK(nominal_growth(0.030, 0.0005, 0.7, 3.0, 0.0) == doctest::Approx(0.030));
    // appreciation never activates the penalty
    CHECK(nominal_growth(0.030, 0.0005, 123.0, 25.0, -20.0) ==
          doctest::Approx(0.020).epsilon(1e-12));
    // depreciation past the threshold: g* + alpha*de - beta*(de - ebar)^2
    CHECK(nominal_growth(0.030, 0.0005, 0.00005, 5.0, 20.0) ==
          doctest::Approx(0.02875).epsilon(1e-12));
    // at the threshold the penalty is exactly zero
    CHECK(nominal_growth(0.030, 0.0005, 1e9, 7.0, 7.0) ==
          doctest::Approx(0.030 + 0.0005 * 7.0).epsilon(1e-12));
}

TEST_CASE("debt step matches the published one-year transitions") {
    CHECK(debt_step(2.40, 0.022, 0.030, 0.020, 0.0) ==
          doctest::Approx(2.4008).epsilon(1e-12));
    CHECK(debt_step(2.40, 0.037, 0.005, 0.0339, 0.0) ==
          doctest::Approx(2.5107).epsilon(1e-12));
    // r = g with d = s leaves the ratio unchanged
    CHECK(debt_step(1.7, 0.03, 0.03, 0.004, 0.004) == doctest::Approx(1.7));
}

TEST_CASE("exact step error") {
    CHECK(exact_step_error(0.022, 0.030, 2.40) ==
          doctest::Approx(2.40 * 0.030 * (-0.008) / 1.030).epsilon(1e-12));
    CHECK(exact_step_error(0.022, 0.030, 2.40) == doctest::Approx(-0.000559).epsilon(1e-3));
    CHECK(exact_step_error(0.04, 0.04, 9.0) == 0.0);
    CHECK(exact_step_error(0.037, 0.005, 2.40) ==
          doctest::Approx(2.40 * 0.005 * 0.032 / 1.005).epsilon(1e-12));
}

TEST_CASE("ioer-adjusted deficit") {
    CHECK(ioer_adjusted_deficit(0.020, 0.005, 1.0, 500, 120, 670) ==
          doctest::Approx(0.0246).epsilon(1e-3));
    CHECK(ioer_adjusted_deficit(0.020, 0.015, 1.0, 500, 120, 670) ==
          doctest::Approx(0.0339).epsilon(1e-3));
    CHECK(ioer_adjusted_deficit(0.020, 0.77, 0.0, 500, 120, 670) == 0.020);
    CHECK(ioer_adjusted_deficit(0.020, 0.015, 0.5, 500, 120, 670) ==
          doctest::Approx(0.0269).epsilon(1e-3));
    CHECK_THROWS_AS(ioer_adjusted_deficit(0.02, 0.01, 1.0, 500, 120, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ioer_adjusted_deficit(0.02, 0.01, 1.5, 500, 120, 670),
                    std::invalid_argument);
}

TEST_CASE("pass-through inflation") {
    CHECK(passthrough_inflation(0.027, -0.00020, -20.0) ==
          doctest::Approx(0.031).epsilon(1e-12));
    CHECK(passthrough_inflation(0.027, -0.123, 0.0) == doctest::Approx(0.027));
    CHECK(passthrough_inflation(0.027, -0.00020, -80.0) ==
          doctest::Approx(0.043).epsilon(1e-12));
}

TEST_CASE("stability check at the baseline") {
    const Calibration calib = baseline_calibration();
    const StabilityResult r = stability_check(calib, 0.0);
    CHECK(r.lhs == doctest::Approx(-0.008).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(-0.020 / 2.40).epsilon(1e-12));
    CHECK_FALSE(r.stable);

    Calibration tighter = calib;
    tighter.r_n = 0.0195; // eps = 0.75%
    CHECK(stability_check(tighter, 0.0).stable);

    Calibration balanced = calib;
    balanced.s = balanced.d; // rhs = 0, stable iff r <= g
    CHECK(stability_check(balanced, 0.0).stable);
    balanced.r_n = 0.031;
    CHECK_FALSE(stability_check(balanced, 0.0).stable);

    Calibration zero_b = calib;
    zero_b.b0 = 0.0;
    CHECK_THROWS_AS(stability_check(zero_b, 0.0), std::invalid_argument);
}

TEST_CASE("effective rate and the premium hook") {
    CHECK(effective_rate(0.022, 0.0) == 0.022);
    CHECK(effective_rate(0.022, 0.005) == doctest::Approx(0.027));
    CHECK_THROWS_AS(effective_rate(0.022, -0.001), std::invalid_argument);

    // hook sign restrictions, sampled: falling in phi, rising in b
    const double kappa = 0.04;
    for (double phi = 0.70; phi < 0.849; phi += 0.01)
        for (double b = 0.5; b < 4.0; b += 0.25) {
            const double h = 1e-6;
            const double d_phi = (hinge_risk_premium(phi + h, b, kappa) -
                                  hinge_risk_premium(phi - h, b, kappa)) / (2 * h);
            const double d_b = (hinge_risk_premium(phi, b + h, kappa) -
                                hinge_risk_premium(phi, b - h, kappa)) / (2 * h);
            CHECK(d_phi < 0.0);
            CHECK(d_b > 0.0);
        }
    // inactive above the warning level
    CHECK(hinge_risk_premium(0.90, 2.4, kappa) == 0.0);
}

TEST_CASE("calibration validation") {
    CHECK_NOTHROW(baseline_calibration().validate());
    Calibration c = baseline_calibration();
    c.phi = 1.2;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = baseline_calibration();
    c.e_bar = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = baseline_calibration();
    c.b0 = -1.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("baseline fixture equals the point-estimate calibration") {
    const Calibration c = baseline_calibration();
    CHECK(c.b0 == 2.40);
    CHECK(c.r_n == 0.022);
    CHECK(c.pi == 0.027);
    CHECK(c.g_n_star == 0.030);
    CHECK(c.alpha == 0.00050);
    CHECK(c.d == 0.020);
    CHECK(c.s == 0.0);
    CHECK(c.phi == 0.90);
    CHECK(c.reserves == 500.0);
    CHECK(c.tbills == 120.0);
    CHECK(c.gdp == 670.0);
}
