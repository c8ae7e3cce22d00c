#pragma once

#include <Eigen/Dense>

namespace econ {

// Classical OLS output. Standard errors and RMSE use the n - k residual
// degrees-of-freedom convention throughout.
struct OlsFit {
  Eigen::VectorXd coefficients;    // intercept first when requested
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd t_statistics;
  double r_squared = 0.0;          // about the mean with intercept, about zero without
  double rmse = 0.0;               // sqrt(RSS / (n - k))
  Eigen::VectorXd residuals;
  Eigen::VectorXd fitted;
  int n_obs = 0;
  int n_params = 0;
};

struct NormalityResult {
  double statistic = 0.0;  // chi-squared scale, 2 degrees of freedom
  double p_value = 1.0;
  double skewness = 0.0;
  double kurtosis = 3.0;   // raw, not excess
};

// Least squares of y on X (optionally augmented with a leading intercept
// column). Throws SingularDesign on rank deficiency and DegenerateInput when
// rows(X) <= columns.
OlsFit fit_ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X, bool intercept);

// Jarque-Bera normality test: n/6 * (S^2 + (K-3)^2 / 4), chi-squared(2).
NormalityResult jarque_bera(const Eigen::VectorXd& residuals);

}  // namespace econ
