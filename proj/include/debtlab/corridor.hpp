#pragma once

#include "debtlab/core_model.hpp"

// Geometry of the stability region in (eps, g*) policy space. The frontier
// eps + g* = pi + (d - s)/b is a slope -1 line; the corridor is everything
// on or above it. Distances are signed perpendicular offsets, positive
// inside the corridor.

namespace debtlab {

struct Frontier {
    double intercept = 0.0; // pi + (d - s)/b
    static constexpr double slope = -1.0;
};

struct OperatingPoint {
    double eps = 0.0;
    double g_n_star = 0.0;
};

Frontier frontier(double pi, double d, double s, double b);

// Signed perpendicular distance from the point to the frontier.
inline double corridor_width(const OperatingPoint& p, const Frontier& f) {
    return ((p.eps + p.g_n_star) - f.intercept) / std::sqrt(2.0);
}

// Minimum repression bias consistent with a non-increasing debt ratio.
double epsilon_star(double pi, double d, double s, double b, double g_n_star);

// Minimum structural growth consistent with a non-increasing debt ratio.
double g_star_min(double pi, double d, double s, double b, double eps);

// Half-width of the linearization-error band drawn around the frontier,
// perpendicular projection of the per-year step error (GDP share).
inline double error_band_halfwidth(double step_error) {
    return std::abs(step_error) / std::sqrt(2.0);
}

enum class BoundarySide { inside, on_boundary, outside };

// |W| below this is reported as "on boundary" rather than a strict sign.
inline constexpr double kBoundaryTol = 1e-12;

inline BoundarySide classify_width(double w) {
    if (std::abs(w) < kBoundaryTol) return BoundarySide::on_boundary;
    return w > 0.0 ? BoundarySide::inside : BoundarySide::outside;
}

struct LimitingCaseResult {
    double lhs = 0.0;    // r_n - g*
    double rhs = 0.0;    // -d/b (s forced to 0)
    bool reduces = true; // full condition agrees with the reduced one
    bool stable = false; // reduced condition holds: ratio non-increasing
    bool bounded = false; // r < g*: ratio converges to a finite attractor
};

// Forces eps = 0 (r_n = pi) and delta_e = 0 and checks that the general
// stability condition collapses to r - g* <= -d/b.
LimitingCaseResult limiting_case_condition(const Calibration& calib);

} // namespace debtlab
