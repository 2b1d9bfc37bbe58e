#include "debtlab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace debtlab {

namespace {

double sched_at(const std::vector<double>& s, int t /*1-based*/) {
    if (s.size() == 1) return s[0];
    return s.at(static_cast<size_t>(t - 1));
}

void check_schedule(const std::vector<double>& s, int horizon, const char* what) {
    if (s.empty() || (s.size() != 1 && s.size() < static_cast<size_t>(horizon)))
        throw std::invalid_argument(std::string("scenario: schedule too short: ") + what);
}

} // namespace

void ScenarioSpec::validate() const {
    if (horizon < 1) throw std::invalid_argument("scenario: horizon must be >= 1");
    if (lead_in_years < 0) throw std::invalid_argument("scenario: negative lead-in");
    check_schedule(rate_hike, horizon, "rate_hike");
    check_schedule(delta_e_path, horizon, "delta_e_path");
    if (pi_mode == PiMode::exogenous) check_schedule(pi_schedule, horizon, "pi_schedule");
    if (revert_after && *revert_after < 0)
        throw std::invalid_argument("scenario: negative revert_after");
}

const MacroState& Trajectory::at_year(int year) const {
    for (const auto& s : states)
        if (s.year == year) return s;
    throw std::out_of_range("trajectory: year not simulated");
}

std::vector<double> Trajectory::debt_path() const {
    std::vector<double> out;
    out.reserve(states.size());
    for (const auto& s : states) out.push_back(s.b);
    return out;
}

Trajectory run_scenario(const ScenarioSpec& spec, const Calibration& calib) {
    spec.validate();
    calib.validate();

    const double g_base = nominal_growth(calib.g_n_star, calib.alpha, calib.beta,
                                         calib.e_bar, 0.0);

    Trajectory traj;
    MacroState base;
    base.year = spec.start_year;
    base.b = calib.b0;
    base.r_n = calib.r_n;
    base.pi = calib.pi;
    base.eps = repression_bias(base.pi, base.r_n);
    base.g_n = g_base;
    base.delta_e = 0.0;
    base.d = calib.d;
    traj.states.push_back(base);

    double b = calib.b0;
    for (int k = 0; k < spec.lead_in_years; ++k) {
        b = debt_step(b, calib.r_n, g_base, calib.d, calib.s);
        MacroState hidden = base;
        hidden.b = b;
        traj.spin_up.push_back(hidden);
    }

    double cum_de = 0.0;
    for (int t = 1; t <= spec.horizon; ++t) {
        const bool in_shock = !spec.revert_after || t <= *spec.revert_after;
        const double hike = in_shock ? sched_at(spec.rate_hike, t) : 0.0;
        const double de = in_shock ? sched_at(spec.delta_e_path, t) : 0.0;
        cum_de += de;

        MacroState st;
        st.year = spec.start_year + t;
        st.r_n = calib.r_n + hike;
        st.delta_e = de;
        st.g_n = nominal_growth(calib.g_n_star, calib.alpha, calib.beta,
                                calib.e_bar, de);
        switch (spec.pi_mode) {
            case PiMode::fixed: st.pi = in_shock ? spec.pi_value : calib.pi; break;
            case PiMode::passthrough:
                st.pi = passthrough_inflation(calib.pi, spec.pass_gamma, cum_de);
                break;
            case PiMode::exogenous:
                st.pi = in_shock ? sched_at(spec.pi_schedule, t) : calib.pi;
                break;
        }
        st.eps = repression_bias(st.pi, st.r_n);
        switch (spec.deficit_mode) {
            case DeficitMode::fixed: st.d = in_shock ? spec.deficit_value : calib.d; break;
            case DeficitMode::ioer:
                st.d = ioer_adjusted_deficit(calib.d, hike, spec.ioer_alpha_pt,
                                             calib.reserves, calib.tbills, calib.gdp);
                break;
        }

        b = debt_step(b, st.r_n, st.g_n, st.d, calib.s);
        st.b = b;
        traj.states.push_back(st);
    }
    return traj;
}

RatchetResult ratchet_experiment(const Calibration& calib,
                                 const ScenarioSpec& shock_spec, int shock_len,
                                 int total_horizon) {
    if (shock_len >= total_horizon)
        throw std::invalid_argument("ratchet: shock_len must be < total_horizon");

    ScenarioSpec base_spec;
    base_spec.name = "baseline";
    base_spec.start_year = shock_spec.start_year;
    base_spec.horizon = total_horizon;
    base_spec.pi_value = calib.pi;
    base_spec.deficit_value = calib.d;

    ScenarioSpec shocked_spec = shock_spec;
    shocked_spec.horizon = total_horizon;
    shocked_spec.revert_after = shock_len;

    RatchetResult out;
    out.shock_len = shock_len;
    out.baseline = run_scenario(base_spec, calib);
    out.shocked = run_scenario(shocked_spec, calib);

    const size_t n = out.baseline.states.size();
    out.gap.resize(n);
    for (size_t i = 0; i < n; ++i)
        out.gap[i] = out.shocked.states[i].b - out.baseline.states[i].b;

    const double g_base = nominal_growth(calib.g_n_star, calib.alpha, calib.beta,
                                         calib.e_bar, 0.0);
    const double factor = 1.0 + calib.r_n - g_base;
    out.gap_closed_form = out.gap;
    for (size_t i = static_cast<size_t>(shock_len) + 1; i < n; ++i)
        out.gap_closed_form[i] =
            out.gap[static_cast<size_t>(shock_len)] *
            std::pow(factor, static_cast<double>(i) - shock_len);
    return out;
}

double gap_half_life(double r_minus_g) {
    if (r_minus_g >= 0.0) return std::numeric_limits<double>::infinity();
    if (r_minus_g <= -1.0)
        throw std::invalid_argument("gap_half_life: decay factor not positive");
    return std::log(2.0) / std::log(1.0 / (1.0 + r_minus_g));
}

double steady_state_debt(double d, double g_minus_r) {
    if (!(g_minus_r > 0.0))
        throw std::invalid_argument("steady_state_debt: no finite attractor for g - r <= 0");
    return d / g_minus_r;
}

std::vector<IoerSweepRow> ioer_sweep(const Calibration& calib,
                                     const ScenarioSpec& scenario_c_base,
                                     const std::vector<double>& alpha_pt_list) {
    ScenarioSpec a = scenario_a();
    a.horizon = scenario_c_base.horizon;
    a.start_year = scenario_c_base.start_year;
    const Trajectory traj_a = run_scenario(a, calib);
    const double b_a = traj_a.states.back().b;

    std::vector<IoerSweepRow> rows;
    rows.reserve(alpha_pt_list.size());
    for (double apt : alpha_pt_list) {
        ScenarioSpec s = scenario_c_base;
        s.deficit_mode = DeficitMode::ioer;
        s.ioer_alpha_pt = apt;
        const Trajectory t = run_scenario(s, calib);
        IoerSweepRow row;
        row.alpha_pt = apt;
        row.deficit = t.states.at(1).d;
        row.b_final = t.states.back().b;
        row.gap_vs_a = row.b_final - b_a;
        row.trap = row.b_final > calib.b0;
        rows.push_back(row);
    }
    return rows;
}

namespace {

Calibration perturbed(const Calibration& calib, const std::string& parameter,
                      double value) {
    Calibration c = calib;
    if (parameter == "eps") {
        c.r_n = calib.pi - value; // eps pins the rate given inflation
    } else if (parameter == "g_star") {
        c.g_n_star = value;
    } else if (parameter == "alpha") {
        c.alpha = value;
    } else {
        throw std::invalid_argument("fan_chart: unknown parameter " + parameter);
    }
    return c;
}

} // namespace

std::vector<FanRow> fan_chart(const Calibration& calib,
                              const std::vector<FanPerturbation>& perturbations) {
    std::vector<FanRow> rows;
    rows.reserve(perturbations.size());
    for (const auto& p : perturbations) {
        ScenarioSpec spec = scenario_by_name(p.scenario);
        spec.lead_in_years = 0; // fan rows use plain timing throughout
        FanRow row;
        row.scenario = p.scenario;
        row.parameter = p.parameter;
        row.low = run_scenario(spec, perturbed(calib, p.parameter, p.low)).states.back().b;
        row.base = run_scenario(spec, perturbed(calib, p.parameter, p.base)).states.back().b;
        row.high = run_scenario(spec, perturbed(calib, p.parameter, p.high)).states.back().b;
        rows.push_back(row);
    }
    return rows;
}

std::vector<FanPerturbation> canonical_fan_perturbations() {
    return {
        {"A", "eps", 0.0025, 0.0050, 0.0075},
        {"A", "g_star", 0.025, 0.030, 0.035},
        {"B", "eps", 0.0025, 0.0050, 0.0075},
        {"B", "g_star", 0.025, 0.030, 0.035},
        {"C-ALT", "alpha", 0.00050, 0.00050, 0.00013},
        {"C-ALT", "g_star", 0.025, 0.030, 0.035},
    };
}

std::optional<double> beta_critical(double g_base, double g_min, double delta_e,
                                    double e_bar) {
    if (delta_e <= e_bar) return std::nullopt; // penalty never activates
    const double gap = delta_e - e_bar;
    return (g_base - g_min) / (gap * gap);
}

ScenarioSpec scenario_a() {
    ScenarioSpec s;
    s.name = "A";
    s.horizon = 4;
    s.rate_hike = {0.0};
    s.delta_e_path = {0.0};
    s.pi_mode = PiMode::fixed;
    s.pi_value = 0.027;
    s.deficit_mode = DeficitMode::fixed;
    s.deficit_value = 0.020;
    return s;
}

ScenarioSpec scenario_b() {
    ScenarioSpec s;
    s.name = "B";
    s.horizon = 4;
    s.rate_hike = {0.005};
    s.delta_e_path = {-10.0};
    s.pi_mode = PiMode::fixed;
    s.pi_value = 0.027;
    s.deficit_mode = DeficitMode::ioer;
    s.ioer_alpha_pt = 1.0;
    // The published trajectory runs one baseline year before the shock
    // window; reproduce that timing.
    s.lead_in_years = 1;
    return s;
}

ScenarioSpec scenario_b_plus() {
    ScenarioSpec s;
    s.name = "B+";
    s.horizon = 4;
    s.rate_hike = {0.010};
    s.delta_e_path = {-40.0};
    s.pi_mode = PiMode::fixed;
    s.pi_value = 0.027;
    s.deficit_mode = DeficitMode::ioer;
    s.ioer_alpha_pt = 1.0;
    return s;
}

ScenarioSpec scenario_c() {
    ScenarioSpec s;
    s.name = "C";
    s.horizon = 4;
    s.rate_hike = {0.015};
    s.delta_e_path = {-50.0};
    s.pi_mode = PiMode::fixed;
    s.pi_value = 0.027;
    s.deficit_mode = DeficitMode::ioer;
    s.ioer_alpha_pt = 1.0;
    return s;
}

ScenarioSpec scenario_c_alt() {
    ScenarioSpec s;
    s.name = "C-ALT";
    s.horizon = 4;
    s.rate_hike = {0.015};
    s.delta_e_path = {-20.0};
    s.pi_mode = PiMode::passthrough;
    s.pass_gamma = -0.00020;
    s.deficit_mode = DeficitMode::fixed;
    // The published table feeds the two-decimal deficit display back into
    // the recursion; the unrounded IOER value is 0.0338806.
    s.deficit_value = 0.0339;
    return s;
}

ScenarioSpec scenario_stress() {
    ScenarioSpec s;
    s.name = "STRESS";
    s.horizon = 4;
    s.rate_hike = {0.015};
    s.delta_e_path = {-50.0};
    s.pi_mode = PiMode::exogenous;
    s.pi_schedule = {0.015, 0.010, 0.005, 0.000};
    s.deficit_mode = DeficitMode::fixed;
    s.deficit_value = 0.035;
    return s;
}

ScenarioSpec ratchet_table_shock() {
    ScenarioSpec s = scenario_b();
    s.name = "RATCHET-TABLE";
    s.deficit_mode = DeficitMode::fixed;
    s.deficit_value = 0.0246;
    return s; // keeps lead_in_years = 1
}

ScenarioSpec ratchet_figure_shock() {
    ScenarioSpec s = ratchet_table_shock();
    s.name = "RATCHET-FIGURE";
    s.lead_in_years = 0;
    return s;
}

ScenarioSpec scenario_by_name(const std::string& name) {
    if (name == "A") return scenario_a();
    if (name == "B") return scenario_b();
    if (name == "B+" || name == "B-PLUS") return scenario_b_plus();
    if (name == "C") return scenario_c();
    if (name == "C-ALT") return scenario_c_alt();
    if (name == "STRESS" || name == "F") return scenario_stress();
    std::string msg = "unknown scenario '" + name + "'; known:";
    for (const auto& n : known_scenario_names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

std::vector<std::string> known_scenario_names() {
    return {"A", "B", "B+", "C", "C-ALT", "STRESS"};
}

} // namespace debtlab
