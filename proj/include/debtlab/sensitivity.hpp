#pragma once

#include "debtlab/core_model.hpp"
#include "debtlab/scenario.hpp"

#include <array>
#include <vector>

// One-year sensitivity grids around the baseline calibration, plus the
// pass-through robustness grid. Delta-b values are GDP shares per year;
// widths are corridor distances.

namespace debtlab {

enum class StableFlag { no, yes, boundary };

struct AlphaPanelRow {
    double alpha = 0.0;   // per JPY/USD, decimal growth
    double g_b = 0.0;     // growth under the moderate-hike depreciation path
    double g_c = 0.0;     // growth under the aggressive-hike path
    double db_a = 0.0;
    double db_b = 0.0;
    double db_c = 0.0;
    bool trap = false;    // db_b > 0
};

struct EpsPanelRow {
    double eps = 0.0;
    double r_a = 0.0;
    double db_a = 0.0;
    double width = 0.0;
    StableFlag stable = StableFlag::no;
};

struct GStarPanelRow {
    double g_star = 0.0;
    double spread_a = 0.0;
    double db_a = 0.0;
    double width_a = 0.0;
    StableFlag stable = StableFlag::no;
    double db_b = 0.0;
};

struct PenaltyPanel {
    std::vector<double> betas;  // decimal growth per (JPY/USD)^2
    std::vector<double> e_bars; // JPY/USD
    double delta_e = 0.0;
    // db[i][j]: beta i, e_bar j; trap flags alongside
    std::vector<std::vector<double>> db;
    std::vector<std::vector<bool>> trap;
};

struct PassthroughGridCell {
    double gamma = 0.0;
    double delta_e = 0.0;
    double b_final = 0.0;
    bool trap = false;
    std::vector<double> debt_path; // for the bitwise gamma-invariance check
};

struct SensitivityPanels {
    std::vector<AlphaPanelRow> alpha_panel;         // Panel A
    std::vector<EpsPanelRow> eps_panel;             // Panel B
    std::vector<GStarPanelRow> g_star_panel;        // Panel C
    PenaltyPanel penalty_d15;                       // Panel D, +15 JPY/USD
    PenaltyPanel penalty_d20;                       // Panel D, +20 JPY/USD
    std::vector<std::vector<PassthroughGridCell>> passthrough_grid; // Panel E
};

// Deficit conventions used by the published grids. The moderate-hike
// column scales the 0.5% shock by the (reserves + tbills)/GDP ratio; the
// aggressive-hike column of the alpha panel scales the 1.5% shock by the
// tighter core-JGB-stock denominator (620/600).
struct PanelDeficits {
    double d_a = 0.020;
    double d_b = 0.0246268656716418; // 0.02 + 0.005*620/670
    double d_c_alpha_panel = 0.0355; // 0.02 + 0.015*620/600
};

SensitivityPanels sensitivity_panels(const Calibration& calib,
                                     const PanelDeficits& deficits = {});

} // namespace debtlab
