#include "debtlab/core_model.hpp"

#include <cmath>

namespace debtlab {

void Calibration::validate() const {
    if (!(b0 > 0.0)) throw std::invalid_argument("calibration: b0 must be > 0");
    if (!(gdp > 0.0)) throw std::invalid_argument("calibration: gdp must be > 0");
    if (reserves < 0.0) throw std::invalid_argument("calibration: reserves < 0");
    if (tbills < 0.0) throw std::invalid_argument("calibration: tbills < 0");
    if (!(e_bar > 0.0)) throw std::invalid_argument("calibration: e_bar must be > 0");
    if (alpha < 0.0) throw std::invalid_argument("calibration: alpha < 0");
    if (beta < 0.0) throw std::invalid_argument("calibration: beta < 0");
    if (phi < 0.0 || phi > 1.0) throw std::invalid_argument("calibration: phi outside [0,1]");
    for (double v : {b0, r_n, pi, g_n_star, alpha, beta, e_bar, d, s, gamma, phi,
                     reserves, tbills, gdp}) {
        if (!std::isfinite(v)) throw std::invalid_argument("calibration: non-finite field");
    }
}

Calibration baseline_calibration() {
    Calibration c;
    c.b0 = 2.40;
    c.r_n = 0.022;
    c.pi = 0.027;
    c.g_n_star = 0.030;
    c.alpha = 0.00050;
    c.beta = 0.0;
    c.e_bar = 10.0;
    c.d = 0.020;
    c.s = 0.0;
    c.gamma = -0.00020;
    c.phi = 0.90;
    c.reserves = 500.0;
    c.tbills = 120.0;
    c.gdp = 670.0;
    return c;
}

double ioer_adjusted_deficit(double d_base, double rate_shock, double alpha_pt,
                             double reserves, double tbills, double gdp) {
    if (!(gdp > 0.0)) throw std::invalid_argument("ioer_adjusted_deficit: gdp <= 0");
    if (alpha_pt < 0.0 || alpha_pt > 1.0)
        throw std::invalid_argument("ioer_adjusted_deficit: alpha_pt outside [0,1]");
    return d_base + alpha_pt * rate_shock * (reserves + tbills) / gdp;
}

StabilityResult stability_check(const Calibration& calib, double delta_e) {
    if (calib.b0 == 0.0) throw std::invalid_argument("stability_check: b0 == 0");
    const double g_n = nominal_growth(calib.g_n_star, calib.alpha, calib.beta,
                                      calib.e_bar, delta_e);
    StabilityResult r;
    r.lhs = calib.r_n - g_n;
    r.rhs = (calib.s - calib.d) / calib.b0;
    r.stable = r.lhs <= r.rhs;
    return r;
}

} // namespace debtlab
