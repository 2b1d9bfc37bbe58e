#include "debtlab/sensitivity.hpp"

#include "debtlab/corridor.hpp"

#include <cmath>

namespace debtlab {

namespace {

double one_year_db(double b, double r, double g, double d, double s) {
    return debt_step(b, r, g, d, s) - b;
}

StableFlag flag_from_db(double db) {
    if (std::abs(db) < 1e-12) return StableFlag::boundary;
    return db <= 0.0 ? StableFlag::yes : StableFlag::no;
}

PenaltyPanel penalty_panel(const Calibration& calib, double delta_e,
                           const std::vector<double>& betas,
                           const std::vector<double>& e_bars) {
    PenaltyPanel p;
    p.betas = betas;
    p.e_bars = e_bars;
    p.delta_e = delta_e;
    p.db.resize(betas.size());
    p.trap.resize(betas.size());
    for (size_t i = 0; i < betas.size(); ++i) {
        p.db[i].resize(e_bars.size());
        p.trap[i].resize(e_bars.size());
        for (size_t j = 0; j < e_bars.size(); ++j) {
            const double g = nominal_growth(calib.g_n_star, calib.alpha, betas[i],
                                            e_bars[j], delta_e);
            const double db = one_year_db(calib.b0, calib.r_n, g, calib.d, calib.s);
            p.db[i][j] = db;
            p.trap[i][j] = db > 0.0;
        }
    }
    return p;
}

} // namespace

SensitivityPanels sensitivity_panels(const Calibration& calib,
                                     const PanelDeficits& deficits) {
    SensitivityPanels out;

    // Panel A: yen-growth elasticity. Depreciation paths are the values
    // consistent with the scenario design growth rates at alpha = 0.050.
    const double de_b = -10.0, de_c = -20.0;
    const double hike_b = 0.005, hike_c = 0.015;
    for (double a : {0.00013, 0.00020, 0.00033, 0.00050}) {
        AlphaPanelRow row;
        row.alpha = a;
        row.g_b = nominal_growth(calib.g_n_star, a, calib.beta, calib.e_bar, de_b);
        row.g_c = nominal_growth(calib.g_n_star, a, calib.beta, calib.e_bar, de_c);
        row.db_a = one_year_db(calib.b0, calib.r_n, calib.g_n_star, deficits.d_a, calib.s);
        row.db_b = one_year_db(calib.b0, calib.r_n + hike_b, row.g_b, deficits.d_b, calib.s);
        row.db_c = one_year_db(calib.b0, calib.r_n + hike_c, row.g_c,
                               deficits.d_c_alpha_panel, calib.s);
        row.trap = row.db_b > 0.0;
        out.alpha_panel.push_back(row);
    }

    // Panel B: repression bias, holding g*, pi, d, b fixed.
    const Frontier f = frontier(calib.pi, calib.d, calib.s, calib.b0);
    const double eps_star_v =
        epsilon_star(calib.pi, calib.d, calib.s, calib.b0, calib.g_n_star);
    std::vector<double> eps_values = {0.0, 0.0025, 0.0050, eps_star_v,
                                      0.0075, 0.0100, 0.0150, 0.0200};
    for (double eps : eps_values) {
        EpsPanelRow row;
        row.eps = eps;
        row.r_a = calib.pi - eps;
        row.db_a = one_year_db(calib.b0, row.r_a, calib.g_n_star, calib.d, calib.s);
        row.width = corridor_width({eps, calib.g_n_star}, f);
        row.stable = flag_from_db(row.db_a);
        out.eps_panel.push_back(row);
    }

    // Panel C: structural growth; the moderate-hike column keeps the
    // -10 JPY/USD design depreciation.
    const double g_min =
        g_star_min(calib.pi, calib.d, calib.s, calib.b0, repression_bias(calib.pi, calib.r_n));
    std::vector<double> g_values = {0.010, 0.015, 0.020, 0.025, 0.030,
                                    g_min, 0.035, 0.040, 0.045};
    for (double gs : g_values) {
        GStarPanelRow row;
        row.g_star = gs;
        row.spread_a = calib.r_n - gs;
        row.db_a = one_year_db(calib.b0, calib.r_n, gs, calib.d, calib.s);
        row.width_a = corridor_width({repression_bias(calib.pi, calib.r_n), gs}, f);
        row.stable = flag_from_db(row.db_a);
        const double g_b = nominal_growth(gs, calib.alpha, calib.beta, calib.e_bar, de_b);
        row.db_b = one_year_db(calib.b0, calib.r_n + hike_b, g_b, deficits.d_b, calib.s);
        out.g_star_panel.push_back(row);
    }

    // Panel D: penalty geometry under the two depreciation scenarios.
    const std::vector<double> betas = {0.00001, 0.00002, 0.00005, 0.00010};
    const std::vector<double> e_bars = {5.0, 10.0, 15.0, 20.0};
    out.penalty_d15 = penalty_panel(calib, 15.0, betas, e_bars);
    out.penalty_d20 = penalty_panel(calib, 20.0, betas, e_bars);

    // Panel E: pass-through x depreciation grid under the aggressive hike.
    // gamma feeds only the inflation path, never the recursion, so debt
    // paths must be identical across gamma rows.
    const std::vector<double> gammas = {-0.00010, -0.00020, -0.00033, -0.00050};
    const std::vector<double> des = {-10.0, -20.0, -33.0, -50.0};
    out.passthrough_grid.resize(gammas.size());
    for (size_t i = 0; i < gammas.size(); ++i) {
        for (double de : des) {
            ScenarioSpec s = scenario_c_alt();
            s.delta_e_path = {de};
            s.pass_gamma = gammas[i];
            s.deficit_mode = DeficitMode::ioer;
            s.ioer_alpha_pt = 1.0;
            const Trajectory t = run_scenario(s, calib);
            PassthroughGridCell cell;
            cell.gamma = gammas[i];
            cell.delta_e = de;
            cell.b_final = t.states.back().b;
            cell.trap = cell.b_final > calib.b0;
            cell.debt_path = t.debt_path();
            out.passthrough_grid[i].push_back(cell);
        }
    }

    return out;
}

} // namespace debtlab
