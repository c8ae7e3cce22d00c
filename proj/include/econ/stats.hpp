#pragma once

#include <Eigen/Dense>

namespace econ {

// Regularized lower incomplete gamma P(a, x), series/continued-fraction form,
// absolute accuracy around 1e-14 for the argument ranges used here.
double gamma_p(double a, double x);

// Upper tail Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

// Chi-squared distribution with df degrees of freedom.
double chi_squared_cdf(double x, double df);
double chi_squared_sf(double x, double df);

// Summary moments. sd/variance use the population convention (divide by n)
// so that rms^2 = mean^2 + variance holds as an identity.
double mean(const Eigen::VectorXd& v);
double variance(const Eigen::VectorXd& v);
double stddev(const Eigen::VectorXd& v);
double rms(const Eigen::VectorXd& v);

// Sample skewness m3/m2^(3/2) and raw kurtosis m4/m2^2 (normal -> 3).
double skewness(const Eigen::VectorXd& v);
double kurtosis(const Eigen::VectorXd& v);

// Interpolated empirical quantile (linear between order statistics), p in [0,1].
double quantile(Eigen::VectorXd sorted_or_not, double p);

}  // namespace econ
