#include "debtlab/golden.hpp"

#include "debtlab/corridor.hpp"
#include "debtlab/econ/ardl.hpp"
#include "debtlab/econ/fair_tests.hpp"
#include "debtlab/econ/local_projections.hpp"
#include "debtlab/econ/lstar.hpp"
#include "debtlab/econ/placebo.hpp"
#include "debtlab/econ/stat_tests.hpp"
#include "debtlab/econ/var.hpp"
#include "debtlab/io/table.hpp"
#include "debtlab/scenario.hpp"
#include "debtlab/sensitivity.hpp"

#include <cmath>

namespace debtlab {

namespace {

std::string sweep_label(double alpha_pt) {
    return format_fixed(alpha_pt * 100.0, 0);
}

} // namespace

int GoldenReport::failures(bool include_contingent) const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass && (include_contingent || !c.contingent)) ++n;
    return n;
}

void GoldenReport::add(const std::string& artifact, const std::string& cell,
                       double expected, double actual, double tol, bool contingent) {
    GoldenCheck c;
    c.artifact = artifact;
    c.cell = cell;
    c.expected = expected;
    c.actual = actual;
    c.tol = tol;
    c.pass = std::isfinite(actual) && std::abs(actual - expected) <= tol;
    c.contingent = contingent;
    checks.push_back(c);
}

double round1(double value_percent) {
    return std::round(value_percent * 10.0) / 10.0;
}

namespace {

void check_trajectory(GoldenReport& rep, const std::string& artifact,
                      const Trajectory& traj, const std::vector<double>& expected_pct) {
    for (size_t i = 0; i < expected_pct.size(); ++i) {
        const double pct = traj.states.at(i).b * 100.0;
        rep.add(artifact, "b_" + std::to_string(traj.states.at(i).year),
                expected_pct[i], round1(pct), 0.05);
    }
}

} // namespace

GoldenReport run_model_goldens(const Calibration& calib) {
    GoldenReport rep;

    // Scenario trajectories, one-decimal display convention.
    check_trajectory(rep, "scenario_a", run_scenario(scenario_a(), calib),
                     {240.0, 240.1, 240.2, 240.2, 240.3});
    check_trajectory(rep, "scenario_b", run_scenario(scenario_b(), calib),
                     {240.0, 243.0, 246.0, 248.9, 251.9});
    check_trajectory(rep, "scenario_c", run_scenario(scenario_c(), calib),
                     {240.0, 251.1, 262.5, 274.3, 286.4});
    const Trajectory c_alt = run_scenario(scenario_c_alt(), calib);
    check_trajectory(rep, "scenario_c_alt", c_alt,
                     {240.0, 247.5, 255.1, 262.8, 270.7});
    {
        const std::vector<double> pi_pct = {2.70, 3.10, 3.50, 3.90, 4.30};
        const std::vector<double> eps_pct = {0.50, -0.60, -0.20, 0.20, 0.60};
        for (size_t i = 0; i < pi_pct.size(); ++i) {
            rep.add("scenario_c_alt", "pi_" + std::to_string(c_alt.states[i].year),
                    pi_pct[i], c_alt.states[i].pi * 100.0, 0.005);
            rep.add("scenario_c_alt", "eps_" + std::to_string(c_alt.states[i].year),
                    eps_pct[i], c_alt.states[i].eps * 100.0, 0.005);
        }
    }
    check_trajectory(rep, "scenario_stress", run_scenario(scenario_stress(), calib),
                     {240.0, 251.2, 262.7, 274.6, 286.9});

    // Moderate-plus tipping point: year-1 accumulation rate.
    {
        const Trajectory bp = run_scenario(scenario_b_plus(), calib);
        rep.add("scenario_b_plus", "accumulation_2027_pct",
                8.21, (bp.states[1].b - bp.states[0].b) * 100.0, 0.01);
    }

    // Closed forms at 1e-6 relative; expected values are written out from
    // the defining formulas, not taken from the library.
    {
        const double pi = calib.pi, d = calib.d, s = calib.s, b = calib.b0;
        const double g = calib.g_n_star, r = calib.r_n;
        const double intercept_f = pi + (d - s) / b;
        const double eps_star_f = intercept_f - g;
        const double g_min_f = intercept_f - (pi - r);
        const double w_f = ((pi - r) + g - intercept_f) / std::sqrt(2.0);
        const double bstar_f = d / (g - r);
        const double halflife_f = std::log(2.0) / std::log(1.0 / (1.0 + r - g));
        const double err_f = b * g * (r - g) / (1.0 + g);
        const double band_f = std::abs(err_f) / std::sqrt(2.0);

        auto rel = [&rep](const std::string& cell, double expected, double actual) {
            rep.add("closed_forms", cell, expected, actual,
                    std::abs(expected) * 1e-6);
        };
        rel("epsilon_star", eps_star_f,
            epsilon_star(pi, d, s, b, g));
        rel("g_star_min", g_min_f, g_star_min(pi, d, s, b, pi - r));
        rel("frontier_intercept", intercept_f, frontier(pi, d, s, b).intercept);
        rel("corridor_width", w_f,
            corridor_width({pi - r, g}, frontier(pi, d, s, b)));
        rel("steady_state", bstar_f, steady_state_debt(d, g - r));
        rel("half_life", halflife_f, gap_half_life(r - g));
        rel("step_error", err_f, exact_step_error(r, g, b));
        rel("band_halfwidth", band_f, error_band_halfwidth(exact_step_error(r, g, b)));
    }

    // Ratchet. The published 2-year table and the decay figure were
    // generated under different shock timing; each fixture reproduces its
    // own artifact.
    {
        const RatchetResult table = ratchet_experiment(calib, ratchet_table_shock(), 2, 9);
        rep.add("ratchet_table", "b_star_2028", 240.2,
                table.baseline.states[2].b * 100.0, 0.1);
        rep.add("ratchet_table", "b_shock_2028", 246.0,
                table.shocked.states[2].b * 100.0, 0.1);
        rep.add("ratchet_table", "b_shock_2029", 246.0,
                table.shocked.states[3].b * 100.0, 0.1);

        const RatchetResult r2 = ratchet_experiment(calib, ratchet_figure_shock(), 2, 9);
        const RatchetResult r5 = ratchet_experiment(calib, ratchet_figure_shock(), 5, 9);
        rep.add("ratchet_gaps", "r2_gap_2035", 5.4, r2.gap.back() * 100.0, 0.1);
        rep.add("ratchet_gaps", "r5_gap_2035", 13.9, r5.gap.back() * 100.0, 0.1);

        // Post-reversion decay follows the closed-form factor step by step.
        const double factor = 1.0 + calib.r_n - calib.g_n_star;
        double worst = 0.0;
        for (const auto* rr : {&table, &r2, &r5}) {
            for (size_t t = static_cast<size_t>(rr->shock_len) + 1; t < rr->gap.size(); ++t)
                worst = std::max(worst,
                                 std::abs(rr->gap[t] - factor * rr->gap[t - 1]));
        }
        rep.add("ratchet_gaps", "decay_law_max_dev", 0.0, worst, 1e-12);
    }

    // IOER pass-through sweep.
    {
        ScenarioSpec base = scenario_c_alt();
        const auto rows = ioer_sweep(calib, base, {0.0, 0.25, 0.5, 0.75, 1.0});
        const double exp_d[] = {2.00, 2.35, 2.69, 3.04, 3.39};
        const double exp_b[] = {265.0, 266.4, 267.8, 269.2, 270.6};
        const double exp_gap[] = {24.6, 26.1, 27.5, 28.9, 30.3};
        for (size_t i = 0; i < rows.size(); ++i) {
            const std::string tag = "apt_" + sweep_label(rows[i].alpha_pt);
            rep.add("ioer_sweep", tag + "_d", exp_d[i], rows[i].deficit * 100.0, 0.05);
            rep.add("ioer_sweep", tag + "_b2030", exp_b[i], rows[i].b_final * 100.0, 0.05);
            rep.add("ioer_sweep", tag + "_gap", exp_gap[i], rows[i].gap_vs_a * 100.0, 0.05);
            rep.add("ioer_sweep", tag + "_trap", 1.0, rows[i].trap ? 1.0 : 0.0, 0.0);
        }
        rep.add("ioer_sweep", "spread", 5.7,
                (rows.back().b_final - rows.front().b_final) * 100.0, 0.05);
    }

    // Sensitivity panels.
    {
        const SensitivityPanels p = sensitivity_panels(calib);

        const double a_gb[] = {2.87, 2.80, 2.67, 2.50};
        const double a_gc[] = {2.74, 2.60, 2.34, 2.00};
        const double a_dbb[] = {2.05, 2.22, 2.53, 2.94};
        const double a_dbc[] = {5.85, 6.19, 6.81, 7.63};
        for (size_t i = 0; i < p.alpha_panel.size(); ++i) {
            const auto& row = p.alpha_panel[i];
            const std::string tag = "alpha_" + format_full(row.alpha * 100.0);
            rep.add("panel_a", tag + "_g_b", a_gb[i], row.g_b * 100.0, 0.01);
            rep.add("panel_a", tag + "_g_c", a_gc[i], row.g_c * 100.0, 0.01);
            rep.add("panel_a", tag + "_db_a", 0.080, row.db_a * 100.0, 0.01);
            rep.add("panel_a", tag + "_db_b", a_dbb[i], row.db_b * 100.0, 0.01);
            rep.add("panel_a", tag + "_db_c", a_dbc[i], row.db_c * 100.0, 0.01);
            rep.add("panel_a", tag + "_trap", 1.0, row.trap ? 1.0 : 0.0, 0.0);
        }

        const double b_db[] = {1.280, 0.680, 0.080, 0.000, -0.520, -1.120, -2.320, -3.520};
        const double b_w[] = {-0.377, -0.200, -0.024, 0.000, 0.153, 0.330, 0.684, 1.037};
        for (size_t i = 0; i < p.eps_panel.size(); ++i) {
            const auto& row = p.eps_panel[i];
            const std::string tag = "eps_" + format_full(row.eps * 100.0);
            rep.add("panel_b", tag + "_db", b_db[i], row.db_a * 100.0, 0.01);
            rep.add("panel_b", tag + "_w", b_w[i], row.width * 100.0, 0.01);
        }

        const double c_db[] = {4.88, 3.68, 2.48, 1.28, 0.08, 0.00, -1.12, -2.32, -3.52};
        const double c_w[] = {-1.44, -1.08, -0.73, -0.38, -0.024, 0.00, 0.33, 0.68, 1.04};
        const double c_dbb[] = {7.74, 6.54, 5.34, 4.14, 2.94, 2.86, 1.74, 0.54, -0.66};
        for (size_t i = 0; i < p.g_star_panel.size(); ++i) {
            const auto& row = p.g_star_panel[i];
            const std::string tag = "gstar_" + format_full(row.g_star * 100.0);
            rep.add("panel_c", tag + "_db_a", c_db[i], row.db_a * 100.0, 0.01);
            rep.add("panel_c", tag + "_w", c_w[i], row.width_a * 100.0, 0.01);
            rep.add("panel_c", tag + "_db_b", c_dbb[i], row.db_b * 100.0, 0.01);
        }

        const double d15[4][4] = {{-1.480, -1.660, -1.720, -1.720},
                                  {-1.240, -1.600, -1.720, -1.720},
                                  {-0.520, -1.420, -1.720, -1.720},
                                  {0.680, -1.120, -1.720, -1.720}};
        const double d20[4][4] = {{-1.780, -2.080, -2.260, -2.320},
                                  {-1.240, -1.840, -2.200, -2.320},
                                  {0.380, -1.120, -2.020, -2.320},
                                  {3.080, 0.080, -1.720, -2.320}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const std::string tag = "b" + std::to_string(i) + "_e" + std::to_string(j);
                rep.add("panel_d15", tag, d15[i][j],
                        p.penalty_d15.db[static_cast<size_t>(i)][static_cast<size_t>(j)] * 100.0,
                        0.01);
                rep.add("panel_d20", tag, d20[i][j],
                        p.penalty_d20.db[static_cast<size_t>(i)][static_cast<size_t>(j)] * 100.0,
                        0.01);
            }

        const double e_cols[] = {265.6, 270.7, 277.5, 286.5};
        for (size_t i = 0; i < p.passthrough_grid.size(); ++i)
            for (size_t j = 0; j < p.passthrough_grid[i].size(); ++j) {
                const auto& cell = p.passthrough_grid[i][j];
                const std::string tag =
                    "g" + std::to_string(i) + "_de" + std::to_string(j);
                rep.add("panel_e", tag + "_b2030", e_cols[j], cell.b_final * 100.0, 0.1);
                rep.add("panel_e", tag + "_trap", 1.0, cell.trap ? 1.0 : 0.0, 0.0);
            }
        // gamma never enters the recursion: paths identical bit for bit.
        bool identical = true;
        for (size_t j = 0; j < p.passthrough_grid.front().size(); ++j)
            for (size_t i = 1; i < p.passthrough_grid.size(); ++i)
                if (p.passthrough_grid[i][j].debt_path !=
                    p.passthrough_grid[0][j].debt_path)
                    identical = false;
        rep.add("panel_e", "gamma_row_identity", 1.0, identical ? 1.0 : 0.0, 0.0);

        const double g_base_d20 = calib.g_n_star + calib.alpha * 20.0;
        const double g_min =
            g_star_min(calib.pi, calib.d, calib.s, calib.b0,
                       repression_bias(calib.pi, calib.r_n));
        const double beta_exp[] = {0.0043, 0.0097, 0.0387};
        const double ebars[] = {5.0, 10.0, 15.0};
        for (int i = 0; i < 3; ++i) {
            const auto bc = beta_critical(g_base_d20, g_min, 20.0, ebars[i]);
            rep.add("beta_critical", "ebar_" + format_full(ebars[i]), beta_exp[i],
                    bc ? *bc * 100.0 : std::nan(""), 1e-4);
        }
        rep.add("beta_critical", "ebar_25_unconditional", 1.0,
                beta_critical(g_base_d20, g_min, 20.0, 25.0) ? 0.0 : 1.0, 0.0);
    }

    // Fan chart.
    {
        const auto rows = fan_chart(calib, canonical_fan_perturbations());
        const double exp[][3] = {{242.7, 240.3, 238.0}, {245.1, 240.3, 235.6},
                                 {254.3, 251.8, 249.4}, {256.7, 251.8, 246.9},
                                 {270.7, 270.7, 263.1}, {275.8, 270.7, 265.5}};
        for (size_t i = 0; i < rows.size(); ++i) {
            const std::string tag = rows[i].scenario + "_" + rows[i].parameter;
            rep.add("fan_chart", tag + "_low", exp[i][0], rows[i].low * 100.0, 0.1);
            rep.add("fan_chart", tag + "_base", exp[i][1], rows[i].base * 100.0, 0.1);
            rep.add("fan_chart", tag + "_high", exp[i][2], rows[i].high * 100.0, 0.1);
        }
    }

    return rep;
}

std::vector<double> slice_years(const TimeSeries& ts, int first_year, int last_year) {
    std::vector<double> out;
    for (size_t i = 0; i < ts.size(); ++i) {
        const int y = ts.dates[i].year;
        if (y >= first_year && y <= last_year && !std::isnan(ts.values[i]))
            out.push_back(ts.values[i]);
    }
    return out;
}

namespace {

// Month-over-month percent change.
TimeSeries mom_percent(const TimeSeries& level, const std::string& name) {
    TimeSeries out;
    out.name = name;
    out.frequency = level.frequency;
    for (size_t i = 1; i < level.size(); ++i) {
        if (std::isnan(level.values[i - 1]) || std::isnan(level.values[i])) continue;
        out.dates.push_back(level.dates[i]);
        out.values.push_back(100.0 * (level.values[i] / level.values[i - 1] - 1.0));
    }
    return out;
}

} // namespace

GoldenReport run_econ_goldens(const SeriesCatalog& input) {
    SeriesCatalog cat = input;
    derive_series(cat);
    const EconWindows win;
    GoldenReport rep;
    const bool ct = true; // every check here is data-vintage contingent

    // ---- Subsample descriptive statistics -------------------------------
    struct SubsampleTarget {
        const char* id;
        double mean_pre, sd_pre, mean_post, sd_post, diff, p;
    };
    const SubsampleTarget subs[] = {
        {"IRLTLT01JPA156N", 2.27, 1.53, 0.27, 0.33, -2.00, 0.000},
        {"JPN_CPI_YOY", 0.25, 1.08, 1.16, 1.28, 0.92, 0.049},
        {"JPN_EPS", -2.03, 1.01, 0.89, 1.09, 2.92, 0.000},
        {"JPN_NGDP_YOY", -0.15, 2.17, 1.93, 2.12, 2.08, 0.016},
        {"JPN_RG_SPREAD", 1.80, 1.98, -1.65, 1.97, -3.45, 0.000},
        {"JPN_DEBT_CHANGE", 7.80, 4.37, 1.26, 8.20, -6.53, 0.028},
        {"JPY_DELTA_E", -2.61, 9.77, 5.97, 9.74, 8.58, 0.023},
    };
    for (const auto& s : subs) {
        const auto pre = slice_years(cat.get(s.id), win.pre_first, win.pre_last);
        const auto post = slice_years(cat.get(s.id), win.post_first, win.post_last);
        const WelchResult w = welch_ttest(pre, post);
        const std::string tag = std::string("H1_") + s.id;
        rep.add("table_h1", tag + "_mean_pre", s.mean_pre, w.mean_a, 0.01, ct);
        rep.add("table_h1", tag + "_sd_pre", s.sd_pre, w.sd_a, 0.01, ct);
        rep.add("table_h1", tag + "_mean_post", s.mean_post, w.mean_b, 0.01, ct);
        rep.add("table_h1", tag + "_sd_post", s.sd_post, w.sd_b, 0.01, ct);
        rep.add("table_h1", tag + "_diff", s.diff, w.diff, 0.01, ct);
        rep.add("table_h1", tag + "_p", s.p, w.p, 0.005, ct);
    }

    // ---- Structural break -----------------------------------------------
    {
        std::vector<double> y, x;
        int break_index = 0;
        const TimeSeries& db = cat.get("JPN_DEBT_CHANGE");
        const TimeSeries& rg = cat.get("JPN_RG_SPREAD");
        for (size_t i = 0; i < db.size(); ++i) {
            const int yr = db.dates[i].year;
            if (yr < win.chow_first || yr > win.chow_last) continue;
            const double spread = rg.at(db.dates[i]);
            if (std::isnan(spread)) continue;
            if (yr < win.chow_break) ++break_index;
            y.push_back(db.values[i]);
            x.push_back(spread);
        }
        const ChowResult c = chow_test(y, x, break_index);
        rep.add("table_h2", "full_const", 4.250, c.pooled.coef(0), 0.01, ct);
        rep.add("table_h2", "full_const_se", 0.725, c.pooled.se(0), 0.01, ct);
        rep.add("table_h2", "full_slope", 2.218, c.pooled.coef(1), 0.01, ct);
        rep.add("table_h2", "full_slope_se", 0.279, c.pooled.se(1), 0.01, ct);
        rep.add("table_h2", "full_r2", 0.701, c.pooled.r2, 0.005, ct);
        rep.add("table_h2", "full_n", 29, static_cast<double>(c.pooled.n), 0.0, ct);
        rep.add("table_h2", "pre_const", 4.955, c.regime1.coef(0), 0.01, ct);
        rep.add("table_h2", "pre_const_se", 1.080, c.regime1.se(0), 0.01, ct);
        rep.add("table_h2", "pre_slope", 1.621, c.regime1.coef(1), 0.01, ct);
        rep.add("table_h2", "pre_slope_se", 0.410, c.regime1.se(1), 0.01, ct);
        rep.add("table_h2", "pre_r2", 0.494, c.regime1.r2, 0.005, ct);
        rep.add("table_h2", "pre_n", 18, static_cast<double>(c.regime1.n), 0.0, ct);
        rep.add("table_h2", "post_const", 7.234, c.regime2.coef(0), 0.01, ct);
        rep.add("table_h2", "post_const_se", 1.272, c.regime2.se(0), 0.01, ct);
        rep.add("table_h2", "post_slope", 3.686, c.regime2.coef(1), 0.01, ct);
        rep.add("table_h2", "post_slope_se", 0.499, c.regime2.se(1), 0.01, ct);
        rep.add("table_h2", "post_r2", 0.858, c.regime2.r2, 0.005, ct);
        rep.add("table_h2", "post_n", 11, static_cast<double>(c.regime2.n), 0.0, ct);
        rep.add("table_h2", "chow_f", 5.55, c.f, 0.05, ct);
        rep.add("table_h2", "chow_p", 0.010, c.p, 0.005, ct);
    }

    // ---- VAR, FEVD, ADF ---------------------------------------------------
    {
        auto grab = [&](const char* id) {
            return slice_years(cat.get(id), win.var_first, win.var_last);
        };
        const std::vector<std::vector<double>> triplet = {
            grab("JPN_EPS"), grab("JPN_RG_SPREAD"), grab("JPN_DEBT_CHANGE")};
        const VarFit fit = var1_fit(triplet);
        rep.add("table_h3", "n", 29, static_cast<double>(fit.n), 0.0, ct);
        const double coef[3][3] = {{0.478, -0.219, -0.023},
                                   {-0.563, 0.563, -0.176},
                                   {-1.053, 0.829, -0.073}};
        const double se[3][3] = {{0.306, 0.383, 0.967},
                                 {0.760, 1.072, 0.049},
                                 {2.124, 0.139, 0.123}};
        const char* vars[] = {"eps", "rg", "db"};
        for (int row = 0; row < 3; ++row)
            for (int eq = 0; eq < 3; ++eq) {
                const std::string tag =
                    std::string("lag_") + vars[row] + "_to_" + vars[eq];
                rep.add("table_h3", tag, coef[row][eq], fit.lag_coef(eq, row), 0.01, ct);
                rep.add("table_h3", tag + "_se", se[row][eq], fit.lag_se(eq, row), 0.01, ct);
            }
        const double consts[3] = {0.043, 0.593, 4.179};
        const double const_se[3] = {0.154, 0.346, 0.344};
        for (int eq = 0; eq < 3; ++eq) {
            rep.add("table_h3", std::string("const_") + vars[eq], consts[eq],
                    fit.intercept(eq), 0.01, ct);
            rep.add("table_h3", std::string("const_") + vars[eq] + "_se", const_se[eq],
                    fit.intercept_se(eq), 0.01, ct);
        }

        const IrfFevd dyn = var_irf_fevd(fit, 5);
        const double fevd[3][3] = {{0.810, 0.175, 0.015},
                                   {0.406, 0.525, 0.068},
                                   {0.275, 0.465, 0.259}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                rep.add("table_h3b", std::string("fevd_") + vars[i] + "_" + vars[j],
                        fevd[i][j], dyn.fevd(i, j), 0.005, ct);
        rep.add("table_h3b", "cum_db_eps_5y", -8.62,
                dyn.cumulative_irf.back()(2, 0), 0.05, ct);
        rep.add("table_h3b", "cum_db_rg_5y", 8.07,
                dyn.cumulative_irf.back()(2, 1), 0.05, ct);

        struct AdfTarget { const char* id; double stat, p; };
        const AdfTarget adfs[] = {{"JPN_EPS", -1.90, 0.331},
                                  {"JPN_RG_SPREAD", -1.62, 0.473},
                                  {"JPN_DEBT_CHANGE", -3.50, 0.008}};
        for (const auto& a : adfs) {
            std::vector<double> series;
            for (size_t i = 0; i < cat.get(a.id).size(); ++i)
                if (!std::isnan(cat.get(a.id).values[i]))
                    series.push_back(cat.get(a.id).values[i]);
            const AdfResult res = adf_test(series, 1);
            rep.add("table_h3", std::string("adf_") + a.id, a.stat, res.stat, 0.01, ct);
            rep.add("table_h3", std::string("adf_") + a.id + "_p", a.p, res.p, 0.005, ct);
        }
    }

    // ---- ARDL bounds ------------------------------------------------------
    {
        const TimeSeries& db = cat.get("JPN_DEBT_CHANGE");
        const TimeSeries& b = cat.get("GGGDTAJPA188N");
        const TimeSeries& eps = cat.get("JPN_EPS");
        const TimeSeries& rg = cat.get("JPN_RG_SPREAD");
        std::vector<double> dy, b_lag, eps_lag, rg_lag, db_lag;
        for (int yr = win.ardl_first; yr <= win.ardl_last; ++yr) {
            const Period t{yr, 0}, t1{yr - 1, 0};
            dy.push_back(db.at(t));
            b_lag.push_back(b.at(t1));
            eps_lag.push_back(eps.at(t1));
            rg_lag.push_back(rg.at(t1));
            db_lag.push_back(db.at(t1));
        }
        const ArdlBoundsResult a = ardl_bounds(dy, {b_lag, eps_lag, rg_lag}, {db_lag});
        rep.add("table_h4", "n", 27, static_cast<double>(a.ecm.n), 0.0, ct);
        rep.add("table_h4", "adjustment", -0.056, a.ecm.coef(1), 0.01, ct);
        rep.add("table_h4", "adjustment_se", 0.038, a.ecm.se(1), 0.01, ct);
        rep.add("table_h4", "eps_level", -0.045, a.ecm.coef(2), 0.01, ct);
        rep.add("table_h4", "eps_level_se", 1.420, a.ecm.se(2), 0.01, ct);
        rep.add("table_h4", "rg_level", 0.468, a.ecm.coef(3), 0.01, ct);
        rep.add("table_h4", "rg_level_se", 0.984, a.ecm.se(3), 0.01, ct);
        rep.add("table_h4", "db_shortrun", 0.032, a.ecm.coef(4), 0.01, ct);
        rep.add("table_h4", "db_shortrun_se", 0.348, a.ecm.se(4), 0.01, ct);
        rep.add("table_h4", "const", 15.439, a.ecm.coef(0), 0.01, ct);
        rep.add("table_h4", "const_se", 7.910, a.ecm.se(0), 0.01, ct);
        rep.add("table_h4", "r2", 0.243, a.ecm.r2, 0.005, ct);
        rep.add("table_h4", "bounds_f", 1.684, a.f, 0.05, ct);
        rep.add("table_h4", "no_cointegration", 1.0,
                a.decision == "no cointegration" ? 1.0 : 0.0, 0.0, ct);
        rep.add("table_h4", "lr_eps", -0.793, a.long_run.at(0), 0.01, ct);
        rep.add("table_h4", "lr_eps_se", 25.30, a.long_run_se.at(0), 0.05, ct);
        rep.add("table_h4", "lr_rg", 8.333, a.long_run.at(1), 0.01, ct);
        rep.add("table_h4", "lr_rg_se", 18.42, a.long_run_se.at(1), 0.05, ct);
        rep.add("table_h4", "lr_identified", 0.0, a.long_run_identified ? 1.0 : 0.0,
                0.0, ct);
    }

    // ---- Local projections -------------------------------------------------
    {
        const TimeSeries& bts = cat.get("GGGDTAJPA188N");
        const TimeSeries& eps = cat.get("JPN_EPS");
        const TimeSeries& rg = cat.get("JPN_RG_SPREAD");
        const TimeSeries& db = cat.get("JPN_DEBT_CHANGE");
        std::vector<double> b, e, r, dlag;
        for (int yr = win.lp_first_year; yr <= win.lp_last_year; ++yr) {
            const Period t{yr, 0}, t1{yr - 1, 0};
            b.push_back(bts.at(t));
            e.push_back(eps.at(t));
            r.push_back(rg.at(t));
            dlag.push_back(db.at(t1));
        }
        // first usable t: needs the spread and the lagged debt change.
        int first_t = 1;
        while (first_t < static_cast<int>(b.size()) &&
               (std::isnan(r[static_cast<size_t>(first_t)]) ||
                std::isnan(dlag[static_cast<size_t>(first_t)])))
            ++first_t;
        const LpResult lp = local_projections(b, {e, r}, {dlag}, 5, first_t);

        const double be[] = {0.74, -1.05, -2.49, -4.57, -6.82, -8.20};
        const double be_se[] = {1.05, 1.62, 1.86, 2.13, 1.18, 1.42};
        const double brg[] = {2.40, 2.85, 3.18, 2.60, 2.67, 2.24};
        const double brg_se[] = {0.53, 0.62, 0.79, 1.16, 0.91, 0.86};
        const long n_h[] = {28, 27, 26, 25, 24, 23};
        for (const auto& hz : lp.horizons) {
            const std::string tag = "h" + std::to_string(hz.h);
            rep.add("table_h5", tag + "_beta_eps", be[hz.h], hz.coef(1), 0.01, ct);
            rep.add("table_h5", tag + "_beta_eps_se", be_se[hz.h], hz.hac_se(1), 0.01, ct);
            rep.add("table_h5", tag + "_beta_rg", brg[hz.h], hz.coef(2), 0.01, ct);
            rep.add("table_h5", tag + "_beta_rg_se", brg_se[hz.h], hz.hac_se(2), 0.01, ct);
            rep.add("table_h5", tag + "_n", static_cast<double>(n_h[hz.h]),
                    static_cast<double>(hz.n), 0.0, ct);
        }
    }

    // ---- K.1 captive share and the real yield ------------------------------
    {
        auto years = [&](const char* id) {
            return slice_years(cat.get(id), 1994, 2024);
        };
        auto real_yield = [&](const char* rate, const char* cpi_yoy) {
            std::vector<double> r = years(rate), p = years(cpi_yoy), out;
            for (size_t i = 0; i < r.size(); ++i) out.push_back(r[i] - p[i]);
            return out;
        };
        auto phi_proxy = [&](const char* rate, const char* policy) {
            std::vector<double> r = years(rate), pol = years(policy), out;
            for (size_t i = 0; i < r.size(); ++i) out.push_back(-(r[i] - pol[i]));
            return out;
        };
        K1Data jp;
        jp.real_yield = real_yield("IRLTLT01JPA156N", "JPN_CPI_YOY");
        jp.us_rate = years("IRLTLT01USA156N");
        jp.phi_proxy = phi_proxy("IRLTLT01JPA156N", "IRSTCI01JPA156N");
        jp.ycc_dummy = years("YCC_DUMMY_JP");
        jp.qqe_dummy = years("QQE_DUMMY_JP");
        std::vector<K1Placebo> placebos;
        {
            K1Placebo us;
            us.country = "US";
            us.real_yield = real_yield("IRLTLT01USA156N", "USA_CPI_YOY");
            us.phi_proxy = phi_proxy("IRLTLT01USA156N", "IRSTCI01USA156N");
            placebos.push_back(us);
            K1Placebo de;
            de.country = "DE";
            de.real_yield = real_yield("IRLTLT01DEA156N", "DEU_CPI_YOY");
            de.phi_proxy = phi_proxy("IRLTLT01DEA156N", "IRSTCI01DEA156N");
            placebos.push_back(de);
        }
        const K1Result k1 = k1_captive_yield(jp, placebos, jp.us_rate);
        rep.add("table_k1", "m1_beta_rus", 0.161, k1.beta_rus_m1, 0.01, ct);
        rep.add("table_k1", "m2_beta_rus", -0.474, k1.beta_rus_m2, 0.01, ct);
        rep.add("table_k1", "m3_beta_rus", -0.453, k1.beta_rus_m3, 0.01, ct);
        rep.add("table_k1", "m2_beta_phi", -2.143, k1.beta_phi_m2, 0.01, ct);
        rep.add("table_k1", "m2_beta_phi_se", 0.624, k1.se_phi_m2, 0.01, ct);
        rep.add("table_k1", "m3_beta_phi", -1.647, k1.beta_phi_m3, 0.01, ct);
        rep.add("table_k1", "m3_beta_phi_se", 0.560, k1.se_phi_m3, 0.01, ct);
        rep.add("table_k1", "m3_ycc", -1.093, k1.ycc_m3, 0.01, ct);
        rep.add("table_k1", "placebo_us_phi", 0.000, k1.placebo_phi.at("US").first,
                0.005, ct);
        rep.add("table_k1", "placebo_us_phi_se", 0.000, k1.placebo_phi.at("US").second,
                0.005, ct);
        rep.add("table_k1", "placebo_de_phi", -0.711, k1.placebo_phi.at("DE").first,
                0.01, ct);
        rep.add("table_k1", "placebo_de_phi_se", 0.286, k1.placebo_phi.at("DE").second,
                0.01, ct);
    }

    // ---- K.2 real debt after large depreciations ---------------------------
    {
        std::vector<double> index, de_pct, pi;
        const TimeSeries& idx = cat.get("JPN_REAL_DEBT_INDEX");
        const TimeSeries& de = cat.get("JPY_DELTA_E_PCT");
        const TimeSeries& cpi = cat.get("JPN_CPI_YOY");
        for (size_t i = 0; i < idx.size(); ++i) {
            index.push_back(idx.values[i]);
            de_pct.push_back(de.at(idx.dates[i]));
            pi.push_back(cpi.at(idx.dates[i]));
        }
        const K2Result k2 = k2_real_debt_lp(index, de_pct, pi, 10.0, 5);
        const double beta[] = {0.00, -0.42, 1.02, 1.11, 1.99, 5.49};
        const double se[] = {0.00, 2.96, 5.11, 7.57, 8.58, 9.64};
        const long n_h[] = {28, 27, 26, 25, 24, 23};
        for (size_t h = 1; h < k2.beta.size(); ++h) {
            rep.add("table_k2", "h" + std::to_string(h) + "_beta", beta[h], k2.beta[h],
                    0.01, ct);
            rep.add("table_k2", "h" + std::to_string(h) + "_se", se[h], k2.se[h], 0.01, ct);
        }
        for (size_t h = 0; h < k2.n.size(); ++h)
            rep.add("table_k2", "h" + std::to_string(h) + "_n",
                    static_cast<double>(n_h[h]), static_cast<double>(k2.n[h]), 0.0, ct);
        rep.add("table_k2", "confirmed", 0.0, k2.confirmed ? 1.0 : 0.0, 0.0, ct);
        rep.add("table_k2", "n_treatment_years", 6.0,
                static_cast<double>(k2.treatment_years.size()), 0.0, ct);
    }

    // ---- K.3 shock-size-controlled pass-through ---------------------------
    {
        const TimeSeries fx = cat.get("DEXJPUS_M");
        const TimeSeries cpi = cat.get("JPNCPIALLMINMEI_M");
        const TimeSeries de = diff(fx, "de_m");
        const TimeSeries dpi = mom_percent(cpi, "dpi_m");
        std::vector<double> x, y;
        std::vector<int> regime;
        const Period cap_start{2016, 9}, cap_end{2024, 3};
        for (size_t i = 0; i < de.size(); ++i) {
            const double dp = dpi.at(de.dates[i]);
            if (std::isnan(dp)) continue;
            x.push_back(de.values[i]);
            y.push_back(dp);
            if (de.dates[i].year < 2013)
                regime.push_back(0);
            else if (!(de.dates[i] < cap_start) && !(cap_end < de.dates[i]))
                regime.push_back(1);
            else
                regime.push_back(-1);
        }
        const K3Result k3 = k3_passthrough(x, y, regime, 5);
        rep.add("table_k3", "free_beta", -0.0091, k3.beta_free, 0.0005, ct);
        rep.add("table_k3", "free_se", 0.0064, k3.se_free, 0.0005, ct);
        rep.add("table_k3", "free_n", 227, static_cast<double>(k3.n_free), 0.0, ct);
        rep.add("table_k3", "captive_beta", 0.0263, k3.beta_captive, 0.0005, ct);
        rep.add("table_k3", "captive_se", 0.0121, k3.se_captive, 0.0005, ct);
        rep.add("table_k3", "captive_n", 58, static_cast<double>(k3.n_captive), 0.0, ct);
        rep.add("table_k3", "interact_base", -0.0097, k3.beta_base, 0.0005, ct);
        rep.add("table_k3", "interact_base_se", 0.0065, k3.se_base, 0.0005, ct);
        rep.add("table_k3", "interact_addon", 0.0309, k3.beta_interact, 0.0005, ct);
        rep.add("table_k3", "interact_addon_se", 0.0125, k3.se_interact, 0.0005, ct);
        rep.add("table_k3", "split_confirmed", 1.0, k3.split_confirmed ? 1.0 : 0.0, 0.0,
                ct);
        rep.add("table_k3", "interact_confirmed", 1.0,
                k3.interact_confirmed ? 1.0 : 0.0, 0.0, ct);

        // ---- L.3 regime-conditioned LSTAR on the same panel ----------------
        auto fit_window = [&](const Period& a, const Period& b) {
            std::vector<double> xs, ys;
            for (size_t i = 0; i < de.size(); ++i) {
                if (de.dates[i] < a || b < de.dates[i]) continue;
                const double dp = dpi.at(de.dates[i]);
                if (std::isnan(dp)) continue;
                xs.push_back(de.values[i]);
                ys.push_back(dp);
            }
            return lstar_fit(xs, ys);
        };
        const LstarResult free_fit = fit_window({1900, 1}, {2012, 12});
        const LstarResult cap_fit = fit_window(cap_start, cap_end);
        const LstarResult full_fit = fit_window({1900, 1}, {2100, 12});
        rep.add("table_l3", "free_gamma", 31.99, free_fit.gamma, 0.01, ct);
        rep.add("table_l3", "free_c", 0.62, free_fit.c, 0.01, ct);
        rep.add("table_l3", "free_dr2", 0.0082, free_fit.delta_r2, 0.0005, ct);
        rep.add("table_l3", "captive_gamma", 30.52, cap_fit.gamma, 0.01, ct);
        rep.add("table_l3", "captive_c", 3.48, cap_fit.c, 0.01, ct);
        rep.add("table_l3", "captive_dr2", 0.0524, cap_fit.delta_r2, 0.0005, ct);
        rep.add("table_l3", "full_gamma", 0.27, full_fit.gamma, 0.01, ct);
        rep.add("table_l3", "full_c", -9.57, full_fit.c, 0.01, ct);
        rep.add("table_l3", "full_dr2", 0.0128, full_fit.delta_r2, 0.0005, ct);
        rep.add("table_l3", "gain_ordering", 1.0,
                cap_fit.delta_r2 > free_fit.delta_r2 ? 1.0 : 0.0, 0.0, ct);
    }

    // ---- K.4 insulation by policy period -----------------------------------
    {
        const TimeSeries& rg = cat.get("JPN_RG_SPREAD");
        const TimeSeries& rus = cat.get("IRLTLT01USA156N");
        std::vector<double> spread, us;
        std::vector<int> period;
        for (size_t i = 0; i < rg.size(); ++i) {
            const int yr = rg.dates[i].year;
            const double u = rus.at(rg.dates[i]);
            if (std::isnan(u)) continue;
            spread.push_back(rg.values[i]);
            us.push_back(u);
            if (yr <= 2012) period.push_back(0);
            else if (yr <= 2015) period.push_back(1);
            else if (yr <= 2023) period.push_back(2);
            else period.push_back(3);
        }
        const K4Result k4 = k4_insulation(spread, us, period,
                                          {"pre-QQE", "QQE", "YCC", "post-YCC"});
        rep.add("table_k4", "pre_beta", -0.188, k4.periods[0].beta, 0.01, ct);
        rep.add("table_k4", "pre_se", 0.474, k4.periods[0].se, 0.01, ct);
        rep.add("table_k4", "pre_n", 18, static_cast<double>(k4.periods[0].n), 0.0, ct);
        rep.add("table_k4", "qqe_insufficient", 1.0,
                k4.periods[1].sufficient ? 0.0 : 1.0, 0.0, ct);
        rep.add("table_k4", "ycc_beta", -1.556, k4.periods[2].beta, 0.01, ct);
        rep.add("table_k4", "ycc_se", 1.134, k4.periods[2].se, 0.01, ct);
        rep.add("table_k4", "ycc_n", 8, static_cast<double>(k4.periods[2].n), 0.0, ct);
        rep.add("table_k4", "post_insufficient", 1.0,
                k4.periods[3].sufficient ? 0.0 : 1.0, 0.0, ct);
        rep.add("table_k4", "slope_diff_t", 1.11, k4.slope_diff_t, 0.01, ct);
        rep.add("table_k4", "slope_diff_p", 0.265, k4.slope_diff_p, 0.005, ct);
    }

    // ---- L.1 / L.2 international placebo -----------------------------------
    {
        struct Country {
            const char* tag;
            const char* rate;
            double beta_free, se_free, beta_cap, wald_p;
            double beta_cap_qe, wald_p_qe;
        };
        const Country cs[] = {
            {"JP", "IRLTLT01JPA156N", 1.867, 0.249, 0.400, 0.000, 0.197, 0.000},
            {"DE", "IRLTLT01DEA156N", 1.050, 0.034, 1.198, 0.049, 1.117, 0.568},
            {"UK", "IRLTLT01GBA156N", 1.114, 0.060, 1.119, 0.969, 1.183, 0.655},
            {"FR", "IRLTLT01FRA156N", 1.023, 0.131, 1.170, 0.228, 1.008, 0.882},
        };
        const auto us = slice_years(cat.get("IRLTLT01USA156N"), 1994, 2024);
        for (const auto& c : cs) {
            const auto rate = slice_years(cat.get(c.rate), 1994, 2024);
            const auto cap =
                slice_years(cat.get(std::string("CAPTIVE_") + c.tag), 1994, 2024);
            const auto qe = slice_years(cat.get(std::string("QE_") + c.tag), 1994, 2024);
            const PlaceboResult raw = placebo_interacted(rate, us, cap);
            const PlaceboResult ctrl =
                placebo_interacted(rate, us, cap, QeControls{qe});
            const std::string tag = c.tag;
            rep.add("table_l1", tag + "_n", 31, static_cast<double>(raw.fit.n), 0.0, ct);
            rep.add("table_l1", tag + "_beta_free", c.beta_free, raw.beta_free, 0.01, ct);
            rep.add("table_l1", tag + "_beta_free_se", c.se_free, raw.se_free, 0.01, ct);
            rep.add("table_l1", tag + "_beta_captive", c.beta_cap, raw.beta_captive,
                    0.01, ct);
            rep.add("table_l1", tag + "_wald_p", c.wald_p, raw.wald_p, 0.005, ct);
            rep.add("table_l2", tag + "_beta_captive", c.beta_cap_qe, ctrl.beta_captive,
                    0.01, ct);
            rep.add("table_l2", tag + "_wald_p", c.wald_p_qe, ctrl.wald_p, 0.005, ct);
        }
    }

    return rep;
}

} // namespace debtlab
