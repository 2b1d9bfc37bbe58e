#include "debtlab/corridor.hpp"

namespace debtlab {

Frontier frontier(double pi, double d, double s, double b) {
    if (!(b > 0.0)) throw std::invalid_argument("frontier: b <= 0");
    return Frontier{pi + (d - s) / b};
}

double epsilon_star(double pi, double d, double s, double b, double g_n_star) {
    if (!(b > 0.0)) throw std::invalid_argument("epsilon_star: b <= 0");
    return pi + (d - s) / b - g_n_star;
}

double g_star_min(double pi, double d, double s, double b, double eps) {
    if (!(b > 0.0)) throw std::invalid_argument("g_star_min: b <= 0");
    return pi + (d - s) / b - eps;
}

LimitingCaseResult limiting_case_condition(const Calibration& calib) {
    Calibration restricted = calib;
    restricted.r_n = calib.pi; // eps = 0
    restricted.s = 0.0;

    LimitingCaseResult out;
    out.lhs = restricted.r_n - restricted.g_n_star;
    out.rhs = -restricted.d / restricted.b0;

    const bool reduced_stable = out.lhs <= out.rhs;
    const StabilityResult full = stability_check(restricted, 0.0);
    out.stable = full.stable;
    out.reduces = (full.stable == reduced_stable);
    out.bounded = out.lhs < 0.0;
    return out;
}

} // namespace debtlab
