#pragma once

#include "debtlab/econ/linreg.hpp"

#include <vector>

namespace debtlab {

struct WelchResult {
    double t = 0.0;
    double p = 0.0;   // two-tailed
    double diff = 0.0; // mean(b) - mean(a)
    double df = 0.0;
    double mean_a = 0.0, mean_b = 0.0;
    double sd_a = 0.0, sd_b = 0.0; // sample (N-1) standard deviations
};

WelchResult welch_ttest(const std::vector<double>& sample_a,
                        const std::vector<double>& sample_b);

struct ChowResult {
    double f = 0.0;
    double p = 0.0;
    RegressionResult pooled;
    RegressionResult regime1;
    RegressionResult regime2;
};

// Parameter-equality F-test for y = a + b*x split at break_index (first
// observation of the second regime). k = 2.
ChowResult chow_test(const std::vector<double>& y, const std::vector<double>& x,
                     int break_index);

struct AdfResult {
    double stat = 0.0;
    double p = 0.0;
    int lags = 0;
    long n_used = 0;
};

// Augmented Dickey-Fuller regression with a constant. The p-value comes
// from the MacKinnon (1994, 2010) response-surface polynomials for the
// constant-only case, evaluated through the normal CDF.
AdfResult adf_test(const std::vector<double>& series, int lags);

// The response-surface p-value mapping itself.
double adf_pvalue_from_stat(double tau);

} // namespace debtlab
