#pragma once

#include "debtlab/econ/linreg.hpp"
#include "debtlab/econ/local_projections.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// The four confounder-aware mechanism checks. Annual inputs share one time
// index; monthly inputs likewise. HAC maxlags = 3 except where a subsample
// is too short for HAC, where HC3 is used instead.

namespace debtlab {

struct K1Data {
    std::vector<double> real_yield;  // r - pi, annual
    std::vector<double> us_rate;
    std::vector<double> phi_proxy;   // -(r - policy rate)
    std::vector<double> ycc_dummy;
    std::vector<double> qqe_dummy;
};

struct K1Placebo {
    std::string country;
    std::vector<double> real_yield;
    std::vector<double> phi_proxy;
};

struct K1Result {
    double beta_rus_m1 = 0.0, beta_rus_m2 = 0.0, beta_rus_m3 = 0.0;
    double beta_phi_m2 = 0.0, se_phi_m2 = 0.0;
    double beta_phi_m3 = 0.0, se_phi_m3 = 0.0;
    double ycc_m3 = 0.0, se_ycc_m3 = 0.0;
    bool phi_negative = false;
    std::map<std::string, std::pair<double, double>> placebo_phi; // beta, se
};

// Nested models 1..3 of the captive-share -> real-yield channel, with the
// same Model-2 specification run on placebo countries.
K1Result k1_captive_yield(const K1Data& japan, const std::vector<K1Placebo>& placebos,
                          const std::vector<double>& us_rate);

struct K2Result {
    std::vector<double> beta;   // per horizon 0..H
    std::vector<double> se;     // HAC(3)
    std::vector<long> n;
    std::vector<int> treatment_years; // indices where the dummy fires
    bool confirmed = false;     // beta_h < 0 for all h >= 2
};

// Local projection of the cumulative real-debt response to a large-
// depreciation treatment dummy T = 1[delta_e > threshold].
K2Result k2_real_debt_lp(const std::vector<double>& real_debt_index,
                         const std::vector<double>& delta_e_pct,
                         const std::vector<double>& pi, double threshold_pct,
                         int max_horizon);

struct K3Result {
    double beta_free = 0.0, se_free = 0.0;
    long n_free = 0;
    double beta_captive = 0.0, se_captive = 0.0;
    long n_captive = 0;
    bool split_confirmed = false;   // beta_captive > beta_free
    double beta_base = 0.0, se_base = 0.0;         // pooled, bin FE
    double beta_interact = 0.0, se_interact = 0.0; // captive add-on
    bool interact_confirmed = false;
};

// Pass-through with the shock size controlled: per-regime OLS with |de| as
// a regressor, then a pooled interaction with |de| quantile-bin fixed
// effects. regime: 0 = free, 1 = captive, anything else excluded.
K3Result k3_passthrough(const std::vector<double>& delta_e,
                        const std::vector<double>& delta_pi,
                        const std::vector<int>& regime, int n_bins = 5);

struct K4Period {
    std::string name;
    double beta = 0.0, se = 0.0; // HC3
    long n = 0;
    bool sufficient = false;     // n >= 4
};

struct K4Result {
    std::vector<K4Period> periods;
    double slope_diff_t = 0.0; // first vs. third period (pre vs. YCC)
    double slope_diff_p = 0.0; // two-tailed, large-sample normal
};

// Per-period slope of the r-g spread on the US rate. Periods with fewer
// than four observations are reported as insufficient.
K4Result k4_insulation(const std::vector<double>& spread,
                       const std::vector<double>& us_rate,
                       const std::vector<int>& period,
                       const std::vector<std::string>& period_names);

} // namespace debtlab
