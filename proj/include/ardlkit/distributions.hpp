#pragma once

namespace ardlkit::dist {

/// Two-sided p-value of a Student-t statistic with `df` degrees of freedom.
double student_t_two_sided(double t, double df);

/// Right-tail probability of F(d1, d2).
double f_upper(double f, double d1, double d2);

/// Right-tail probability of chi-squared(df).
double chi2_upper(double x, double df);

double normal_cdf(double z);

}  // namespace ardlkit::dist
