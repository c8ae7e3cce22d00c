#include "econ/ols.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "econ/errors.hpp"
#include "econ/stats.hpp"

namespace econ {

OlsFit fit_ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X, bool intercept) {
  if (X.rows() != y.size()) {
    throw DegenerateInput("design rows " + std::to_string(X.rows()) +
                          " != response length " + std::to_string(y.size()));
  }

  Eigen::MatrixXd D;
  if (intercept) {
    D.resize(X.rows(), X.cols() + 1);
    D.col(0).setOnes();
    D.rightCols(X.cols()) = X;
  } else {
    D = X;
  }

  const Eigen::Index n = D.rows();
  const Eigen::Index k = D.cols();
  if (k == 0) {
    throw DegenerateInput("design matrix has no columns");
  }
  if (n <= k) {
    throw DegenerateInput("need more observations (" + std::to_string(n) +
                          ") than parameters (" + std::to_string(k) + ")");
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(D);
  if (qr.rank() < k) {
    throw SingularDesign("design matrix is rank deficient (rank " +
                         std::to_string(qr.rank()) + " of " + std::to_string(k) + ")");
  }

  OlsFit fit;
  fit.coefficients = qr.solve(y);
  fit.fitted = D * fit.coefficients;
  fit.residuals = y - fit.fitted;
  fit.n_obs = static_cast<int>(n);
  fit.n_params = static_cast<int>(k);

  const double rss = fit.residuals.squaredNorm();
  const double sigma2 = rss / static_cast<double>(n - k);
  fit.rmse = std::sqrt(sigma2);

  // (D'D)^{-1} through the QR factors; k is small everywhere in this library.
  Eigen::MatrixXd gram_inv =
      (D.transpose() * D).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
  fit.standard_errors = (sigma2 * gram_inv.diagonal().array()).cwiseMax(0.0).sqrt();

  fit.t_statistics.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    fit.t_statistics(i) = fit.standard_errors(i) > 0.0
                              ? fit.coefficients(i) / fit.standard_errors(i)
                              : std::numeric_limits<double>::quiet_NaN();
  }

  const double tss = intercept ? (y.array() - y.mean()).square().sum()
                               : y.squaredNorm();
  fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : (rss == 0.0 ? 1.0 : 0.0);
  return fit;
}

NormalityResult jarque_bera(const Eigen::VectorXd& residuals) {
  const Eigen::Index n = residuals.size();
  if (n < 8) {
    throw DegenerateInput("jarque_bera needs at least 8 observations");
  }
  NormalityResult r;
  r.skewness = skewness(residuals);  // throws DegenerateInput on zero variance
  r.kurtosis = kurtosis(residuals);
  const double s2 = r.skewness * r.skewness;
  const double kex = r.kurtosis - 3.0;
  r.statistic = static_cast<double>(n) / 6.0 * (s2 + kex * kex / 4.0);
  r.p_value = chi_squared_sf(r.statistic, 2.0);
  return r;
}

}  // namespace econ
