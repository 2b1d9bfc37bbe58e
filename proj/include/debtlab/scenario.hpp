#pragma once

#include "debtlab/core_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace debtlab {

enum class PiMode { fixed, passthrough, exogenous };
enum class DeficitMode { fixed, ioer };

// A declarative policy experiment. Schedules cover the simulated years
// 1..horizon; a length-1 schedule broadcasts. rate_hike is a level shift
// against the calibration rate, delta_e is JPY/USD per year.
struct ScenarioSpec {
    std::string name;
    int start_year = 2026;
    int horizon = 4;
    std::vector<double> rate_hike{0.0};
    std::vector<double> delta_e_path{0.0};
    PiMode pi_mode = PiMode::fixed;
    double pi_value = 0.027;                // fixed mode
    double pass_gamma = -0.00020;           // passthrough mode
    std::vector<double> pi_schedule;        // exogenous mode
    DeficitMode deficit_mode = DeficitMode::fixed;
    double deficit_value = 0.020;           // fixed mode
    double ioer_alpha_pt = 1.0;             // ioer mode
    std::optional<int> revert_after;        // shock years before full reversion
    // Baseline-dynamics transitions applied to the debt ratio before the
    // first reported shock year. Not reported as rows; kept in
    // Trajectory::spin_up so the step identity stays auditable.
    int lead_in_years = 0;

    void validate() const;
};

struct Trajectory {
    std::vector<MacroState> states;  // states[0] is the unshocked base row
    std::vector<MacroState> spin_up; // hidden lead-in transitions, if any

    const MacroState& at_year(int year) const;
    std::vector<double> debt_path() const;
};

Trajectory run_scenario(const ScenarioSpec& spec, const Calibration& calib);

struct RatchetResult {
    Trajectory baseline;
    Trajectory shocked;
    std::vector<double> gap;        // shocked minus baseline, per year
    std::vector<double> gap_closed_form; // Prop-style decay from end of shock
    int shock_len = 0;
};

// Applies shock_spec for shock_len years, then reverts to baseline
// parameters; the no-shock path runs baseline throughout.
RatchetResult ratchet_experiment(const Calibration& calib,
                                 const ScenarioSpec& shock_spec, int shock_len,
                                 int total_horizon);

// ln 2 / ln(1/(1+x)); +inf when the gap does not decay (x >= 0).
double gap_half_life(double r_minus_g);

// d/(g - r); requires a strictly positive denominator.
double steady_state_debt(double d, double g_minus_r);

struct IoerSweepRow {
    double alpha_pt = 0.0;
    double deficit = 0.0;
    double b_final = 0.0;
    double gap_vs_a = 0.0; // same-year difference against the no-hike path
    bool trap = false;     // b_final > b0
};

std::vector<IoerSweepRow> ioer_sweep(const Calibration& calib,
                                     const ScenarioSpec& scenario_c_base,
                                     const std::vector<double>& alpha_pt_list);

struct FanPerturbation {
    std::string scenario;  // which base spec the perturbation applies to
    std::string parameter; // "eps", "g_star" or "alpha"
    double low = 0.0;      // unfavorable parameter value
    double base = 0.0;
    double high = 0.0;     // favorable parameter value
};

struct FanRow {
    std::string scenario;
    std::string parameter;
    double low = 0.0, base = 0.0, high = 0.0; // final-year debt ratios
};

std::vector<FanRow> fan_chart(const Calibration& calib,
                              const std::vector<FanPerturbation>& perturbations);

std::vector<FanPerturbation> canonical_fan_perturbations();

// Penalty coefficient at which the depreciation penalty exactly absorbs the
// growth surplus; no finite threshold exists when delta_e <= e_bar.
std::optional<double> beta_critical(double g_base, double g_min, double delta_e,
                                    double e_bar);

// Canonical policy-experiment fixtures.
ScenarioSpec scenario_a();
ScenarioSpec scenario_b();       // +0.5% hike; published-table timing (lead-in 1)
ScenarioSpec scenario_b_plus();  // +1.0% hike
ScenarioSpec scenario_c();       // +1.5% hike, -50 JPY/USD upper bound
ScenarioSpec scenario_c_alt();   // +1.5% hike, -20 JPY/USD, passthrough pi
ScenarioSpec scenario_stress();  // +1.5% hike, exogenous disinflation path
ScenarioSpec ratchet_table_shock();  // lead-in 1 timing, matches the 2-yr table
ScenarioSpec ratchet_figure_shock(); // no lead-in, matches the decay-gap figure
ScenarioSpec scenario_by_name(const std::string& name);
std::vector<std::string> known_scenario_names();

} // namespace debtlab
