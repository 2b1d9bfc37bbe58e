#pragma once

#include "debtlab/core_model.hpp"
#include "debtlab/io/catalog.hpp"

#include <string>
#include <vector>

namespace debtlab {

struct GoldenCheck {
    std::string artifact; // table or figure the cell belongs to
    std::string cell;
    double expected = 0.0;
    double actual = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool contingent = false; // data-vintage-dependent diagnostic tier
};

struct GoldenReport {
    std::vector<GoldenCheck> checks;

    int failures(bool include_contingent = false) const;
    void add(const std::string& artifact, const std::string& cell, double expected,
             double actual, double tol, bool contingent = false);
};

// Display-rounding used by the published tables (one decimal, half away
// from zero).
double round1(double value_percent);

// Model/simulation golden tier: scenario trajectories, closed forms,
// ratchet, IOER sweep, sensitivity panels, fan chart.
GoldenReport run_model_goldens(const Calibration& calib);

// Econometric golden tier against the bundled fixture vintage. Contingent:
// diagnostic rather than gating.
GoldenReport run_econ_goldens(const SeriesCatalog& catalog);

// Window conventions for the fixture-based estimations (documented in the
// fixture README).
struct EconWindows {
    int chow_first = 1995, chow_last = 2023, chow_break = 2013;
    int var_first = 1995, var_last = 2024;
    int lp_first_year = 1994, lp_last_year = 2023; // response support
    int ardl_first = 1997, ardl_last = 2023;
    int pre_first = 1991, pre_last = 2012;  // descriptive subsamples
    int post_first = 2013, post_last = 2024;
};

std::vector<double> slice_years(const TimeSeries& ts, int first_year, int last_year);

} // namespace debtlab
