#pragma once

// Minimal distribution functions for test statistics: standard normal,
// Student t, and F CDFs. The t and F tails go through the regularized
// incomplete beta function (continued-fraction evaluation).

namespace debtlab {

double normal_cdf(double x);

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

double student_t_cdf(double t, double df);

// Two-tailed p-value for a t statistic.
double t_test_pvalue(double t, double df);

double f_cdf(double f, double df1, double df2);

// Upper-tail p-value for an F statistic.
double f_test_pvalue(double f, double df1, double df2);

} // namespace debtlab
