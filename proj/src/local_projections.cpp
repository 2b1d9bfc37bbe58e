#include "debtlab/econ/local_projections.hpp"

#include <stdexcept>

namespace debtlab {

LpResult local_projections(const std::vector<double>& response,
                           const std::vector<std::vector<double>>& shocks,
                           const std::vector<std::vector<double>>& controls,
                           int max_horizon, int first_t) {
    if (max_horizon < 0) throw std::invalid_argument("local_projections: negative horizon");
    if (first_t < 1) throw std::invalid_argument("local_projections: first_t must be >= 1");
    const long t_len = static_cast<long>(response.size());
    for (const auto& s : shocks)
        if (static_cast<long>(s.size()) != t_len)
            throw std::invalid_argument("local_projections: shock length mismatch");
    for (const auto& c : controls)
        if (static_cast<long>(c.size()) != t_len)
            throw std::invalid_argument("local_projections: control length mismatch");

    const long k = 1 + static_cast<long>(shocks.size() + controls.size());

    LpResult out;
    out.requested_h = max_horizon;
    for (int h = 0; h <= max_horizon; ++h) {
        const long last_t = t_len - 1 - h;
        const long n = last_t - first_t + 1;
        if (n < k + 3) { out.truncated = true; break; }

        std::vector<double> y(static_cast<size_t>(n));
        std::vector<std::vector<double>> cols(shocks.size() + controls.size(),
                                              std::vector<double>(static_cast<size_t>(n)));
        for (long i = 0; i < n; ++i) {
            const long t = first_t + i;
            y[static_cast<size_t>(i)] =
                response[static_cast<size_t>(t + h)] - response[static_cast<size_t>(t - 1)];
            size_t c = 0;
            for (const auto& s : shocks)
                cols[c++][static_cast<size_t>(i)] = s[static_cast<size_t>(t)];
            for (const auto& ctl : controls)
                cols[c++][static_cast<size_t>(i)] = ctl[static_cast<size_t>(t)];
        }

        LpHorizon row;
        row.h = h;
        row.n = n;
        row.fit = ols(to_eigen(y), column_matrix(cols), true);
        hac_se(row.fit, h);
        row.coef = row.fit.coef;
        row.hac_se = row.fit.robust_se;
        out.horizons.push_back(std::move(row));
    }
    return out;
}

} // namespace debtlab
