#include "debtlab/econ/placebo.hpp"

#include "debtlab/econ/distributions.hpp"

#include <cmath>

namespace debtlab {

PlaceboResult placebo_interacted(const std::vector<double>& country_rate,
                                 const std::vector<double>& us_rate,
                                 const std::vector<double>& captive_dummy,
                                 const std::optional<QeControls>& qe) {
    const size_t n = country_rate.size();
    if (us_rate.size() != n || captive_dummy.size() != n)
        throw std::invalid_argument("placebo_interacted: length mismatch");

    std::vector<double> interaction(n);
    for (size_t i = 0; i < n; ++i) interaction[i] = us_rate[i] * captive_dummy[i];

    std::vector<std::vector<double>> cols = {us_rate, interaction, captive_dummy};
    if (qe) {
        if (qe->qe_level.size() != n)
            throw std::invalid_argument("placebo_interacted: QE length mismatch");
        std::vector<double> us_qe(n);
        for (size_t i = 0; i < n; ++i) us_qe[i] = us_rate[i] * qe->qe_level[i];
        cols.push_back(qe->qe_level);
        cols.push_back(us_qe);
    }

    PlaceboResult out;
    try {
        out.fit = ols(to_eigen(country_rate), column_matrix(cols), true);
    } catch (const RankDeficiencyError&) {
        // Dummy never (or always) active: the interaction is collinear.
        out.interaction_dropped = true;
        out.fit = ols(to_eigen(country_rate), column_matrix({us_rate}), true);
        hac_se(out.fit, 3);
        out.beta_free = out.fit.coef(1);
        out.se_free = out.fit.robust_se(1);
        out.beta_captive = out.beta_free;
        out.wald_p = 1.0;
        return out;
    }

    hac_se(out.fit, 3);
    out.beta_free = out.fit.coef(1);
    out.se_free = out.fit.robust_se(1);
    out.beta_interaction = out.fit.coef(2);
    out.se_interaction = out.fit.robust_se(2);
    out.beta_captive = out.beta_free + out.beta_interaction;
    const double t = out.beta_interaction / out.se_interaction;
    out.wald_p = t_test_pvalue(t, static_cast<double>(out.fit.n - out.fit.k));
    return out;
}

} // namespace debtlab
