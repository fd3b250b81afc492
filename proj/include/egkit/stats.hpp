#pragma once

namespace egkit {

// Upper regularized incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

// Right-tail p-value of a chi-square statistic.
double chi_square_pvalue(double statistic, int degrees_of_freedom);

}  // namespace egkit
