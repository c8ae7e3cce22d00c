#include "econ/var.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "econ/stats.hpp"

namespace econ {

namespace {

// Stack aligned series into a T x m matrix, one column per variable.
Eigen::MatrixXd data_matrix(const std::vector<AnnualSeries>& data) {
  if (data.size() < 1) {
    throw DegenerateInput("VAR needs at least one series");
  }
  for (const auto& s : data) {
    if (!same_span(s, data.front())) {
      throw AlignmentError("VAR series must share an identical year span");
    }
  }
  Eigen::MatrixXd y(data.front().size(), static_cast<Eigen::Index>(data.size()));
  for (std::size_t j = 0; j < data.size(); ++j) {
    y.col(static_cast<Eigen::Index>(j)) = data[j].values();
  }
  return y;
}

struct Regression {
  Eigen::MatrixXd coef;      // k x m, one column per equation
  Eigen::MatrixXd se;        // k x m
  Eigen::MatrixXd residuals; // n x m
  Eigen::VectorXd r2;
  Eigen::VectorXd rmse;
};

// Joint least squares of all equations on a shared design.
Regression multi_ols(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  const Eigen::Index m = Y.cols();
  if (n <= k) {
    throw DegenerateInput("VAR sample too small for " + std::to_string(k) +
                          " regressors");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < k) {
    throw SingularDesign("VAR design matrix is rank deficient");
  }
  Regression reg;
  reg.coef = qr.solve(Y);
  reg.residuals = Y - X * reg.coef;
  const Eigen::MatrixXd gram_inv =
      (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
  reg.se.resize(k, m);
  reg.r2.resize(m);
  reg.rmse.resize(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double rss = reg.residuals.col(j).squaredNorm();
    const double sigma2 = rss / static_cast<double>(n - k);
    reg.se.col(j) = (sigma2 * gram_inv.diagonal().array()).cwiseMax(0.0).sqrt();
    reg.rmse(j) = std::sqrt(sigma2);
    const double tss = (Y.col(j).array() - Y.col(j).mean()).square().sum();
    reg.r2(j) = tss > 0.0 ? 1.0 - rss / tss : (rss == 0.0 ? 1.0 : 0.0);
  }
  return reg;
}

double log_det_cov(const Eigen::MatrixXd& residuals) {
  const double n = static_cast<double>(residuals.rows());
  const Eigen::MatrixXd sigma = residuals.transpose() * residuals / n;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(sigma);
  if (ldlt.info() != Eigen::Success || (ldlt.vectorD().array() <= 0.0).any()) {
    throw SingularSystem("residual covariance matrix is singular");
  }
  return ldlt.vectorD().array().log().sum();
}

}  // namespace

VarFit fit_var(const std::vector<AnnualSeries>& data, int lag_order,
               const std::optional<ExogSpec>& exog) {
  if (lag_order < 1) {
    throw InvalidSpec("VAR lag order must be positive");
  }
  const Eigen::MatrixXd Y = data_matrix(data);
  const auto m = static_cast<int>(data.size());
  const Eigen::Index t_len = Y.rows();
  if (t_len < static_cast<Eigen::Index>(m) * lag_order + 10) {
    throw DegenerateInput("VAR needs length >= n_vars * lag_order + 10");
  }
  const int start_year = data.front().start_year();

  int max_exog_lag = 0;
  if (exog) {
    if (exog->lags.empty()) {
      throw InvalidSpec("exogenous series given without lags");
    }
    for (const int l : exog->lags) {
      if (l < 0) throw InvalidSpec("exogenous lags must be non-negative");
      max_exog_lag = std::max(max_exog_lag, l);
    }
  }

  const Eigen::Index n = t_len - lag_order;
  const int n_exog = exog ? static_cast<int>(exog->lags.size()) : 0;
  const Eigen::Index k = static_cast<Eigen::Index>(m) * lag_order + n_exog + 1;

  Eigen::MatrixXd X(n, k);
  Eigen::MatrixXd rhs(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index t = lag_order + i;
    rhs.row(i) = Y.row(t);
    Eigen::Index col = 0;
    for (int l = 1; l <= lag_order; ++l) {
      X.block(i, col, 1, m) = Y.row(t - l);
      col += m;
    }
    if (exog) {
      const int year = start_year + static_cast<int>(t);
      for (const int l : exog->lags) {
        X(i, col++) = exog->series.at_year(year - l);  // AlignmentError if missing
      }
    }
    X(i, col) = 1.0;
  }

  const Regression reg = multi_ols(X, rhs);

  VarFit fit;
  fit.lag_order = lag_order;
  fit.n_vars = m;
  fit.n_obs = static_cast<int>(n);
  fit.n_params_per_equation = static_cast<int>(k);
  fit.sample_start = start_year + lag_order;
  fit.sample_end = start_year + static_cast<int>(t_len) - 1;
  fit.residuals = reg.residuals;
  fit.per_equation_r2 = reg.r2;
  fit.per_equation_rmse = reg.rmse;
  fit.design = X;

  for (int l = 0; l < lag_order; ++l) {
    // multi_ols coefficients are k x m with equations in columns; transpose
    // each lag block so rows index equations.
    fit.lag_coefficients.push_back(reg.coef.block(l * m, 0, m, m).transpose());
    fit.lag_standard_errors.push_back(reg.se.block(l * m, 0, m, m).transpose());
  }
  if (exog) {
    fit.exog_lags = exog->lags;
    fit.exog_coefficients = reg.coef.block(m * lag_order, 0, n_exog, m).transpose();
    fit.exog_standard_errors = reg.se.block(m * lag_order, 0, n_exog, m).transpose();
  }
  fit.intercept = reg.coef.row(k - 1).transpose();
  fit.intercept_se = reg.se.row(k - 1).transpose();
  return fit;
}

LagSelection select_lag(const std::vector<AnnualSeries>& data, int max_lag) {
  if (max_lag < 1) {
    throw InvalidSpec("select_lag needs max_lag >= 1");
  }
  const Eigen::MatrixXd Y = data_matrix(data);
  const auto m = static_cast<int>(data.size());
  const Eigen::Index t_len = Y.rows();
  const Eigen::Index n = t_len - max_lag;  // common sample across candidates
  if (n < static_cast<Eigen::Index>(m) * max_lag + 1 + 4) {
    throw DegenerateInput("max_lag too large for the sample");
  }

  // Fit each candidate on the same rows so criteria are comparable; lag 0 is
  // the intercept-only baseline for the first LR test.
  std::vector<double> lndet(max_lag + 1);
  for (int p = 0; p <= max_lag; ++p) {
    const Eigen::Index k = static_cast<Eigen::Index>(m) * p + 1;
    Eigen::MatrixXd X(n, k);
    Eigen::MatrixXd rhs(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index t = max_lag + i;
      rhs.row(i) = Y.row(t);
      Eigen::Index col = 0;
      for (int l = 1; l <= p; ++l) {
        X.block(i, col, 1, m) = Y.row(t - l);
        col += m;
      }
      X(i, col) = 1.0;
    }
    const Regression reg = multi_ols(X, rhs);
    lndet[p] = log_det_cov(reg.residuals);
  }

  LagSelection sel;
  sel.n_obs = static_cast<int>(n);
  const double nn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  const double ll_const = dm * (std::log(2.0 * M_PI) + 1.0);
  for (int p = 1; p <= max_lag; ++p) {
    LagSelection::Row row;
    row.lag = p;
    row.lr = nn * (lndet[p - 1] - lndet[p]);
    row.lr_p = chi_squared_sf(row.lr, dm * dm);
    const double kbar = dm * p + 1.0;           // regressors per equation
    const double k_total = dm * kbar;           // free coefficients
    row.fpe = std::pow((nn + kbar) / (nn - kbar), dm) * std::exp(lndet[p]);
    row.aic = ll_const + lndet[p] + 2.0 * k_total / nn;
    row.hqic = ll_const + lndet[p] + 2.0 * std::log(std::log(nn)) * k_total / nn;
    row.sbic = ll_const + lndet[p] + std::log(nn) * k_total / nn;
    sel.rows.push_back(row);
  }

  auto argmin = [&](auto field) {
    int best = 1;
    double best_v = sel.rows.front().*field;
    for (const auto& row : sel.rows) {
      if (row.*field < best_v) {
        best_v = row.*field;
        best = row.lag;
      }
    }
    return best;
  };
  sel.chosen_fpe = argmin(&LagSelection::Row::fpe);
  sel.chosen_aic = argmin(&LagSelection::Row::aic);
  sel.chosen_hqic = argmin(&LagSelection::Row::hqic);
  sel.chosen_sbic = argmin(&LagSelection::Row::sbic);
  sel.chosen_lr = 0;
  for (int p = max_lag; p >= 1; --p) {
    if (sel.rows[p - 1].lr_p < 0.05) {
      sel.chosen_lr = p;
      break;
    }
  }

  std::map<int, int> votes;
  for (const int c : {sel.chosen_lr, sel.chosen_fpe, sel.chosen_aic,
                      sel.chosen_hqic, sel.chosen_sbic}) {
    ++votes[c];
  }
  int best_lag = 0;
  int best_votes = -1;
  for (const auto& [lag, count] : votes) {
    if (count > best_votes) {
      best_votes = count;
      best_lag = lag;
    }
  }
  sel.consensus = best_lag;
  return sel;
}

Eigen::VectorXd companion_moduli(const VarFit& fit) {
  const int m = fit.n_vars;
  const int p = fit.lag_order;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m * p, m * p);
  for (int l = 0; l < p; ++l) {
    companion.block(0, l * m, m, m) = fit.lag_coefficients[l];
  }
  if (p > 1) {
    companion.block(m, 0, m * (p - 1), m * (p - 1))
        .setIdentity();
  }
  const Eigen::VectorXcd eig = companion.eigenvalues();
  Eigen::VectorXd moduli = eig.array().abs();
  std::sort(moduli.data(), moduli.data() + moduli.size(), std::greater<double>());
  return moduli;
}

std::pair<double, double> lm_autocorr(const VarFit& fit, int lag) {
  if (lag < 1) {
    throw InvalidSpec("lm_autocorr lag must be positive");
  }
  const Eigen::Index n = fit.residuals.rows();
  const Eigen::Index m = fit.residuals.cols();
  const Eigen::Index k_aug = fit.design.cols() + m;
  if (n <= k_aug || lag >= n) {
    throw DegenerateInput("lm_autocorr lag too large for the residual sample");
  }

  // Auxiliary regression of the residuals on the original regressors plus the
  // lag-shifted residuals, with zeros filling the pre-sample rows.
  Eigen::MatrixXd X(n, k_aug);
  X.leftCols(fit.design.cols()) = fit.design;
  X.rightCols(m).setZero();
  for (Eigen::Index t = lag; t < n; ++t) {
    X.block(t, fit.design.cols(), 1, m) = fit.residuals.row(t - lag);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < k_aug) {
    throw SingularDesign("LM auxiliary regression is rank deficient");
  }
  const Eigen::MatrixXd aux_res = fit.residuals - X * qr.solve(fit.residuals);

  const double lndet0 = log_det_cov(fit.residuals);
  const double lndet1 = log_det_cov(aux_res);
  const double scale = static_cast<double>(n) - static_cast<double>(k_aug) - 0.5;
  const double stat = std::max(0.0, scale * (lndet0 - lndet1));
  const double df = static_cast<double>(m) * static_cast<double>(m);
  return {stat, chi_squared_sf(stat, df)};
}

DiagnosticsReport diagnose(const VarFit& fit, int max_lm_lag) {
  DiagnosticsReport report;
  for (int l = 1; l <= max_lm_lag; ++l) {
    report.lm_by_lag[l] = lm_autocorr(fit, l);
  }

  for (Eigen::Index j = 0; j < fit.residuals.cols(); ++j) {
    report.jb_per_equation.push_back(jarque_bera(fit.residuals.col(j)));
  }

  // Joint test on orthogonalized residuals (Cholesky of the ML covariance).
  const Eigen::Index n = fit.residuals.rows();
  const Eigen::MatrixXd sigma =
      fit.residuals.transpose() * fit.residuals / static_cast<double>(n);
  const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw SingularSystem("residual covariance not positive definite");
  }
  const Eigen::MatrixXd orth =
      llt.matrixL().solve(fit.residuals.transpose()).transpose();
  double joint = 0.0;
  for (Eigen::Index j = 0; j < orth.cols(); ++j) {
    joint += jarque_bera(orth.col(j)).statistic;
  }
  report.jb_joint_statistic = joint;
  report.jb_joint_p =
      chi_squared_sf(joint, 2.0 * static_cast<double>(fit.residuals.cols()));
  report.companion_moduli = companion_moduli(fit);
  return report;
}

}  // namespace econ
