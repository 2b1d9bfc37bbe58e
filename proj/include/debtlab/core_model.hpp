#pragma once

#include <cmath>
#include <stdexcept>

// Closed-form debt-dynamics equations. All rates are decimals per year
// (0.022 = 2.2%). Exchange-rate sensitivities are stored per JPY/USD in
// decimal-growth units: the conventional "0.050% of growth per yen" is
// 0.00050 here. Stocks are trillion yen. The display layer converts to
// percent; nothing in this header does.

namespace debtlab {

struct Calibration {
    double b0 = 2.40;        // debt-to-GDP ratio, dimensionless
    double r_n = 0.022;      // nominal 10y rate
    double pi = 0.027;       // CPI inflation
    double g_n_star = 0.030; // structural potential nominal growth
    double alpha = 0.00050;  // growth per JPY/USD of depreciation
    double beta = 0.0;       // growth penalty per (JPY/USD)^2 beyond e_bar
    double e_bar = 10.0;     // depreciation stability threshold, JPY/USD
    double d = 0.020;        // primary deficit, share of GDP
    double s = 0.0;          // seigniorage, share of GDP
    double gamma = -0.00020; // CPI per JPY/USD of depreciation (<= 0)
    double phi = 0.90;       // captive share in [0,1]
    double reserves = 500.0; // central-bank current-account stock, T yen
    double tbills = 120.0;   // floating-rate short-term debt stock, T yen
    double gdp = 670.0;      // nominal GDP, T yen

    void validate() const;
};

// Point-estimate baseline (March 2026 vintage).
Calibration baseline_calibration();

struct MacroState {
    int year = 0;
    double b = 0.0;
    double r_n = 0.0;
    double pi = 0.0;
    double eps = 0.0;     // pi - r_n, stored for convenience, never independent
    double g_n = 0.0;
    double delta_e = 0.0; // JPY/USD per year, positive = depreciation
    double d = 0.0;
};

// eps_t = pi_t - r_n_t. Positive means the real bond yield is negative.
inline double repression_bias(double pi, double r_n) { return pi - r_n; }

// g_n = g* + alpha*de - beta*max(0, de - e_bar)^2. The penalty is exactly
// zero whenever de <= e_bar, in particular under any appreciation.
inline double nominal_growth(double g_n_star, double alpha, double beta,
                             double e_bar, double delta_e) {
    const double excess = delta_e - e_bar;
    const double penalty = excess > 0.0 ? beta * excess * excess : 0.0;
    return g_n_star + alpha * delta_e - penalty;
}

// One year of the linearized transition b' = b(1 + r - g) + d - s.
inline double debt_step(double b_prev, double r_n, double g_n, double d,
                        double s) {
    return b_prev * (1.0 + r_n - g_n) + d - s;
}

// Gap between the exact factor (1+r)/(1+g) and its linearization, scaled
// by the debt stock: b * g(r-g)/(1+g), in GDP shares per year. Negative
// means the linear step overstates accumulation.
inline double exact_step_error(double r_n, double g_n, double b_prev) {
    return b_prev * g_n * (r_n - g_n) / (1.0 + g_n);
}

// d + alpha_pt * shock * (reserves + tbills)/gdp: the mechanical deficit
// widening when a rate shock passes through to reserve remuneration and
// short-term rollover.
double ioer_adjusted_deficit(double d_base, double rate_shock, double alpha_pt,
                             double reserves, double tbills, double gdp);

// pi = pi_base + gamma * cumulative depreciation.
inline double passthrough_inflation(double pi_base, double gamma,
                                    double cumulative_delta_e) {
    return pi_base + gamma * cumulative_delta_e;
}

struct StabilityResult {
    double lhs = 0.0; // r_n - g_n(delta_e)
    double rhs = 0.0; // (s - d)/b0
    bool stable = false;
};

// Debt ratio declines (weakly) iff r - g <= (s - d)/b.
StabilityResult stability_check(const Calibration& calib, double delta_e);

// r_n plus a sovereign risk premium. The premium itself is a pluggable
// hook; the default is identically zero.
inline double effective_rate(double r_n, double rho) {
    if (rho < 0.0) throw std::invalid_argument("effective_rate: rho < 0");
    return r_n + rho;
}

// Optional linear-hinge premium hook: kappa * max(0, phi_warn - phi) * b.
// Decreasing in phi, increasing in b, zero while the captive share holds.
inline double hinge_risk_premium(double phi, double b, double kappa,
                                 double phi_warn = 0.85) {
    const double slack = phi_warn - phi;
    return slack > 0.0 ? kappa * slack * b : 0.0;
}

} // namespace debtlab
