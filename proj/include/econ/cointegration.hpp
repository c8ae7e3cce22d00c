#pragma once

#include <optional>
#include <vector>

#include "econ/ols.hpp"
#include "econ/series.hpp"
#include "econ/unit_root.hpp"

namespace econ {

struct EGResult {
  OlsFit step1;  // y on x with intercept
  std::vector<UnitRootResult> residual_adf;    // lags 0..max_lag, trend none
  std::vector<UnitRootResult> residual_dfgls;  // lags 1..max_lag, GLS-demeaned
  std::optional<SignificanceLevel> cointegrated_at;  // strongest level all lags reject
  bool perfect_fit = false;  // residuals numerically zero; tests degenerate
};

struct JohansenResult {
  Eigen::VectorXd eigenvalues;        // descending, in [0, 1)
  Eigen::VectorXd trace_statistics;   // hypothesis r = 0..n-1
  Eigen::VectorXd critical_values_5pct;
  std::vector<double> log_likelihood; // per rank 0..n
  std::vector<double> sbic;           // per rank 0..n, reported, not used for rank
  std::vector<double> hqic;
  int selected_rank = 0;
  int lag_order = 0;
  TrendSpec trend = TrendSpec::constant;
  int n_obs = 0;
  Eigen::MatrixXd beta_space;  // all n eigenvectors (columns), unnormalized
};

struct VecmFit {
  Eigen::MatrixXd beta;   // n_vars x rank, first rank x rank block = identity
  Eigen::MatrixXd alpha;  // n_vars x rank adjustment coefficients
  Eigen::MatrixXd alpha_se;
  // One n_vars x n_vars matrix per difference lag (lag_order - 1 of them).
  std::vector<Eigen::MatrixXd> short_run;
  std::vector<Eigen::MatrixXd> short_run_se;
  Eigen::VectorXd intercept;  // zero when trend spec is none
  Eigen::VectorXd intercept_se;
  Eigen::VectorXd per_equation_r2;
  Eigen::VectorXd per_equation_rmse;
  Eigen::MatrixXd residuals;  // n_obs x n_vars
  int rank = 0;
  int lag_order = 0;
  int n_obs = 0;
};

// Engle-Granger two-step test: OLS of y on x, then unit-root tests on the
// residuals across lags. ADF runs with no deterministic terms (the residuals
// are zero mean by construction); DF-GLS runs GLS-demeaned, the least
// deterministic specification that test admits.
EGResult engle_granger(const AnnualSeries& y, const AnnualSeries& x, int max_lag);

// Johansen trace test via reduced-rank regression of the VECM form with
// lag_order - 1 difference lags and an unrestricted constant (trend spec
// constant) or no deterministics (none). Rank selection walks r upward and
// stops at the first trace statistic below its 5% critical value.
JohansenResult johansen_trace(const std::vector<AnnualSeries>& data, int lag_order,
                              TrendSpec trend);

// VECM with the cointegrating space fixed at the leading Johansen
// eigenvectors; adjustment and short-run coefficients by least squares.
VecmFit fit_vecm(const std::vector<AnnualSeries>& data, int rank, int lag_order,
                 TrendSpec trend);

}  // namespace econ
