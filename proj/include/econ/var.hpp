#pragma once

#include <map>
#include <optional>
#include <vector>

#include "econ/ols.hpp"
#include "econ/series.hpp"

namespace econ {

// Exogenous regressor entering the VAR at the given lags (0 = contemporaneous).
struct ExogSpec {
  AnnualSeries series;
  std::vector<int> lags;
};

struct VarFit {
  // One n_vars x n_vars matrix per lag; row i = equation i, column j = the
  // coefficient on variable j at that lag.
  std::vector<Eigen::MatrixXd> lag_coefficients;
  std::vector<Eigen::MatrixXd> lag_standard_errors;
  // n_vars x exog_lags.size(); empty when no exogenous series was given.
  Eigen::MatrixXd exog_coefficients;
  Eigen::MatrixXd exog_standard_errors;
  std::vector<int> exog_lags;
  Eigen::VectorXd intercept;
  Eigen::VectorXd intercept_se;
  Eigen::MatrixXd residuals;  // n_obs x n_vars
  Eigen::VectorXd per_equation_r2;
  Eigen::VectorXd per_equation_rmse;
  int lag_order = 0;
  int n_obs = 0;
  int n_vars = 0;
  int n_params_per_equation = 0;
  int sample_start = 0;  // first fitted calendar year
  int sample_end = 0;
  Eigen::MatrixXd design;  // regressors, kept for residual diagnostics
};

struct LagSelection {
  struct Row {
    int lag = 0;
    double lr = 0.0;       // sequential test against lag-1
    double lr_p = 1.0;
    double fpe = 0.0;
    double aic = 0.0;
    double hqic = 0.0;
    double sbic = 0.0;
  };
  std::vector<Row> rows;   // lags 1..max on a common estimation sample
  int chosen_lr = 0;       // largest lag with significant LR at 5%, 0 if none
  int chosen_fpe = 0;
  int chosen_aic = 0;
  int chosen_hqic = 0;
  int chosen_sbic = 0;
  int consensus = 0;       // modal choice, smallest on ties
  int n_obs = 0;
};

struct DiagnosticsReport {
  std::map<int, std::pair<double, double>> lm_by_lag;  // lag -> (stat, p)
  double jb_joint_statistic = 0.0;  // orthogonalized residuals, chi2(2m)
  double jb_joint_p = 1.0;
  std::vector<NormalityResult> jb_per_equation;
  Eigen::VectorXd companion_moduli;  // descending
};

// Per-equation OLS of each variable on `lag_order` lags of all endogenous
// variables, an intercept, and optionally an exogenous series at fixed lags.
VarFit fit_var(const std::vector<AnnualSeries>& data, int lag_order,
               const std::optional<ExogSpec>& exog = std::nullopt);

// Pre-estimation lag-order statistics on a common sample: sequential LR and
// the FPE / AIC / HQIC / SBIC information criteria (Lutkepohl 2005 definitions
// with the full Gaussian likelihood constants, matching common package output).
LagSelection select_lag(const std::vector<AnnualSeries>& data, int max_lag);

// Moduli of the companion-matrix eigenvalues, sorted descending; the fitted
// VAR is stable iff the leading modulus is below one.
Eigen::VectorXd companion_moduli(const VarFit& fit);

// Multivariate LM test for residual autocorrelation at the given lag
// (auxiliary regression with lag-shifted residuals, zeros in the pre-sample;
// small-sample scaling per Johansen). Chi-squared with n_vars^2 dof.
std::pair<double, double> lm_autocorr(const VarFit& fit, int lag);

// Residual diagnostics bundle: LM at lags 1..max_lm_lag, Jarque-Bera joint
// (orthogonalized) and per equation, companion moduli.
DiagnosticsReport diagnose(const VarFit& fit, int max_lm_lag);

}  // namespace econ
