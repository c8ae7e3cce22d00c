#include "econ/cointegration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <string>

#include "econ/stats.hpp"

namespace econ {

namespace {

constexpr std::array<SignificanceLevel, 3> kLevels = {
    SignificanceLevel::pct1, SignificanceLevel::pct5, SignificanceLevel::pct10};

// 5% asymptotic trace critical values by number of remaining hypotheses
// n - r. Constant case: unrestricted constant in the VAR (Osterwald-Lenum
// 1992, Table 1); none: no deterministic terms (Table 0).
constexpr double kTrace5Constant[] = {3.76, 15.41, 29.68, 47.21, 68.52, 94.15};
constexpr double kTrace5None[] = {4.14, 12.53, 24.31, 39.89, 59.46, 82.49};

double trace_critical_5pct(TrendSpec trend, int remaining) {
  constexpr int n_max = static_cast<int>(std::size(kTrace5Constant));
  if (remaining < 1 || remaining > n_max) {
    throw InvalidSpec("trace critical values available for up to " +
                      std::to_string(n_max) + " variables");
  }
  switch (trend) {
    case TrendSpec::constant: return kTrace5Constant[remaining - 1];
    case TrendSpec::none: return kTrace5None[remaining - 1];
    case TrendSpec::trend: break;
  }
  throw InvalidSpec("Johansen deterministic case must be none or constant");
}

struct RRR {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd beta_space;    // columns = eigenvectors in beta space
  Eigen::MatrixXd z0;            // differenced observations, n x m
  Eigen::MatrixXd z1;            // lagged levels, n x m
  Eigen::MatrixXd z2;            // short-run regressors (may have 0 columns)
  double lndet_s00 = 0.0;
  int n_obs = 0;
};

// Reduced-rank regression backbone shared by the trace test and the VECM.
RRR reduced_rank(const std::vector<AnnualSeries>& data, int lag_order,
                 TrendSpec trend) {
  if (trend == TrendSpec::trend) {
    throw InvalidSpec("Johansen deterministic case must be none or constant");
  }
  if (lag_order < 1) {
    throw InvalidSpec("Johansen lag order must be >= 1");
  }
  const auto m = static_cast<Eigen::Index>(data.size());
  if (m < 2) {
    throw DegenerateInput("Johansen needs at least two series");
  }
  for (const auto& s : data) {
    if (!same_span(s, data.front())) {
      throw AlignmentError("Johansen series must share an identical year span");
    }
  }
  const Eigen::Index t_len = data.front().size();
  if (t_len < m * (lag_order + 2) + 10) {
    throw DegenerateInput("Johansen needs length >= n*(lag+2) + 10");
  }

  Eigen::MatrixXd y(t_len, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    y.col(j) = data[static_cast<std::size_t>(j)].values();
  }

  const int p = lag_order;
  const Eigen::Index n = t_len - p;
  const int n_lags = p - 1;
  const int det = trend == TrendSpec::constant ? 1 : 0;
  const Eigen::Index k2 = static_cast<Eigen::Index>(m) * n_lags + det;

  RRR r;
  r.n_obs = static_cast<int>(n);
  r.z0.resize(n, m);
  r.z1.resize(n, m);
  r.z2.resize(n, k2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index t = p + i;
    r.z0.row(i) = y.row(t) - y.row(t - 1);
    r.z1.row(i) = y.row(t - 1);
    Eigen::Index col = 0;
    for (int l = 1; l <= n_lags; ++l) {
      r.z2.block(i, col, 1, m) = y.row(t - l) - y.row(t - l - 1);
      col += m;
    }
    if (det == 1) r.z2(i, col) = 1.0;
  }

  // Partial out the short-run regressors.
  Eigen::MatrixXd r0 = r.z0;
  Eigen::MatrixXd r1 = r.z1;
  if (k2 > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(r.z2);
    if (qr.rank() < k2) {
      throw SingularSystem("short-run regressor block is rank deficient");
    }
    r0 -= r.z2 * qr.solve(r.z0);
    r1 -= r.z2 * qr.solve(r.z1);
  }

  const double nn = static_cast<double>(n);
  const Eigen::MatrixXd s00 = r0.transpose() * r0 / nn;
  const Eigen::MatrixXd s01 = r0.transpose() * r1 / nn;
  const Eigen::MatrixXd s11 = r1.transpose() * r1 / nn;

  const Eigen::LLT<Eigen::MatrixXd> llt00(s00);
  const Eigen::LLT<Eigen::MatrixXd> llt11(s11);
  if (llt00.info() != Eigen::Success) {
    throw SingularSystem("S00 product-moment matrix is singular");
  }
  if (llt11.info() != Eigen::Success) {
    throw SingularSystem("S11 product-moment matrix is singular");
  }
  {
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(s00);
    r.lndet_s00 = ldlt.vectorD().array().log().sum();
  }

  // Symmetrized eigenproblem: L11^{-1} S10 S00^{-1} S01 L11^{-T}.
  const Eigen::MatrixXd l11 = llt11.matrixL();
  const Eigen::MatrixXd s00_inv_s01 = llt00.solve(s01);
  const Eigen::MatrixXd core = s01.transpose() * s00_inv_s01;  // S10 S00^-1 S01
  const Eigen::MatrixXd left = l11.triangularView<Eigen::Lower>().solve(core);
  const Eigen::MatrixXd sym = l11.triangularView<Eigen::Lower>()
                                  .solve(left.transpose())
                                  .transpose();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (sym + sym.transpose()));
  if (es.info() != Eigen::Success) {
    throw SingularSystem("Johansen eigenproblem failed to converge");
  }

  // Ascending from Eigen; reverse and map back to beta space.
  r.eigenvalues.resize(m);
  r.beta_space.resize(m, m);
  const Eigen::MatrixXd u = es.eigenvectors();
  for (Eigen::Index j = 0; j < m; ++j) {
    const Eigen::Index src = m - 1 - j;
    r.eigenvalues(j) = std::clamp(es.eigenvalues()(src), 0.0, 1.0 - 1e-15);
    r.beta_space.col(j) =
        l11.transpose().triangularView<Eigen::Upper>().solve(u.col(src));
  }
  return r;
}

}  // namespace

EGResult engle_granger(const AnnualSeries& y, const AnnualSeries& x, int max_lag) {
  if (!same_span(y, x)) {
    throw AlignmentError("Engle-Granger series must share the same year span");
  }
  if (y.size() < 15) {
    throw DegenerateInput("Engle-Granger needs at least 15 observations");
  }
  if (max_lag < 0) {
    throw InvalidSpec("max_lag must be non-negative");
  }

  EGResult result;
  Eigen::MatrixXd design(x.size(), 1);
  design.col(0) = x.values();
  result.step1 = fit_ols(y.values(), design, true);

  const AnnualSeries residuals(y.start_year(), result.step1.residuals, y.unit());
  const double scale = std::max(1.0, y.values().array().abs().maxCoeff());
  if (result.step1.residuals.array().abs().maxCoeff() < 1e-10 * scale) {
    // Exact linear relation: the residual regressions would be singular.
    result.perfect_fit = true;
    result.cointegrated_at = SignificanceLevel::pct1;
    return result;
  }

  for (int l = 0; l <= max_lag; ++l) {
    result.residual_adf.push_back(adf_test(residuals, l, TrendSpec::none));
  }
  for (int l = 1; l <= max_lag; ++l) {
    result.residual_dfgls.push_back(dfgls_test(residuals, l, TrendSpec::constant));
  }

  for (const auto level : kLevels) {
    bool all = true;
    for (const auto& t : result.residual_adf) {
      all = all && t.statistic < t.critical_values.at(level);
    }
    for (const auto& t : result.residual_dfgls) {
      all = all && t.statistic < t.critical_values.at(level);
    }
    if (all) {
      result.cointegrated_at = level;
      break;
    }
  }
  return result;
}

JohansenResult johansen_trace(const std::vector<AnnualSeries>& data, int lag_order,
                              TrendSpec trend) {
  const RRR rrr = reduced_rank(data, lag_order, trend);
  const Eigen::Index m = rrr.eigenvalues.size();
  const double nn = static_cast<double>(rrr.n_obs);

  JohansenResult res;
  res.eigenvalues = rrr.eigenvalues;
  res.lag_order = lag_order;
  res.trend = trend;
  res.n_obs = rrr.n_obs;
  res.beta_space = rrr.beta_space;

  // Suffix accumulation right to left keeps the ladder identity
  // trace(r) = trace(r+1) - T ln(1 - lambda_{r+1}) bit-exact.
  res.trace_statistics.resize(m);
  double acc = 0.0;
  for (Eigen::Index r = m - 1; r >= 0; --r) {
    acc = acc + (-nn * std::log1p(-res.eigenvalues(r)));
    res.trace_statistics(r) = acc;
  }

  res.critical_values_5pct.resize(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    res.critical_values_5pct(r) = trace_critical_5pct(trend, static_cast<int>(m - r));
  }

  res.selected_rank = static_cast<int>(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    if (res.trace_statistics(r) < res.critical_values_5pct(r)) {
      res.selected_rank = static_cast<int>(r);
      break;
    }
  }

  // Log likelihood and information criteria per rank, printed alongside the
  // trace ladder; rank choice stays with the trace procedure.
  const int det = trend == TrendSpec::constant ? 1 : 0;
  const double ll_const =
      static_cast<double>(m) * (std::log(2.0 * M_PI) + 1.0);
  for (int r = 0; r <= m; ++r) {
    double lndet_term = rrr.lndet_s00;
    for (int i = 0; i < r; ++i) {
      lndet_term += std::log1p(-res.eigenvalues(i));
    }
    const double ll = -0.5 * nn * (ll_const + lndet_term);
    const double mm = static_cast<double>(m);
    const double k_free =
        mm * (mm * (lag_order - 1) + det) + static_cast<double>(r) * (2.0 * mm - r);
    res.log_likelihood.push_back(ll);
    res.sbic.push_back((-2.0 * ll + std::log(nn) * k_free) / nn);
    res.hqic.push_back((-2.0 * ll + 2.0 * std::log(std::log(nn)) * k_free) / nn);
  }
  return res;
}

VecmFit fit_vecm(const std::vector<AnnualSeries>& data, int rank, int lag_order,
                 TrendSpec trend) {
  const auto m = static_cast<int>(data.size());
  if (rank < 1 || rank > m - 1) {
    throw InvalidSpec("VECM rank must lie in [1, n_vars - 1]");
  }
  const RRR rrr = reduced_rank(data, lag_order, trend);

  // Phillips normalization: leading rank x rank block of beta becomes the
  // identity; with rank 1 the first component is +1.
  const Eigen::MatrixXd raw = rrr.beta_space.leftCols(rank);
  const Eigen::MatrixXd top = raw.topRows(rank);
  if (std::abs(Eigen::FullPivLU<Eigen::MatrixXd>(top).determinant()) < 1e-14) {
    throw SingularSystem("beta normalization block is singular");
  }
  Eigen::MatrixXd beta = raw * top.inverse();

  VecmFit fit;
  fit.beta = beta;
  fit.rank = rank;
  fit.lag_order = lag_order;
  fit.n_obs = rrr.n_obs;

  // Least squares of the differences on the error-correction terms and the
  // short-run block (which already carries the constant for the constant spec).
  const Eigen::Index n = rrr.z0.rows();
  const Eigen::MatrixXd ect = rrr.z1 * beta;  // n x rank
  Eigen::MatrixXd X(n, rank + rrr.z2.cols());
  X.leftCols(rank) = ect;
  X.rightCols(rrr.z2.cols()) = rrr.z2;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < X.cols()) {
    throw SingularSystem("VECM regression is rank deficient");
  }
  const Eigen::MatrixXd coef = qr.solve(rrr.z0);
  fit.residuals = rrr.z0 - X * coef;

  const Eigen::Index k = X.cols();
  const Eigen::MatrixXd gram_inv =
      (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
  Eigen::MatrixXd se(k, m);
  fit.per_equation_r2.resize(m);
  fit.per_equation_rmse.resize(m);
  const bool centered = trend == TrendSpec::constant;
  for (int j = 0; j < m; ++j) {
    const double rss = fit.residuals.col(j).squaredNorm();
    const double sigma2 = rss / static_cast<double>(n - k);
    se.col(j) = (sigma2 * gram_inv.diagonal().array()).cwiseMax(0.0).sqrt();
    fit.per_equation_rmse(j) = std::sqrt(sigma2);
    const auto& yj = rrr.z0.col(j);
    const double tss =
        centered ? (yj.array() - yj.mean()).square().sum() : yj.squaredNorm();
    fit.per_equation_r2(j) = tss > 0.0 ? 1.0 - rss / tss : (rss == 0.0 ? 1.0 : 0.0);
  }

  fit.alpha = coef.topRows(rank).transpose();
  fit.alpha_se = se.topRows(rank).transpose();
  const int n_lags = lag_order - 1;
  for (int l = 0; l < n_lags; ++l) {
    fit.short_run.push_back(coef.block(rank + l * m, 0, m, m).transpose());
    fit.short_run_se.push_back(se.block(rank + l * m, 0, m, m).transpose());
  }
  if (trend == TrendSpec::constant) {
    fit.intercept = coef.row(k - 1).transpose();
    fit.intercept_se = se.row(k - 1).transpose();
  } else {
    fit.intercept = Eigen::VectorXd::Zero(m);
    fit.intercept_se = Eigen::VectorXd::Zero(m);
  }
  return fit;
}

}  // namespace econ
