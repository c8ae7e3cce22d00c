#include "econ/demog.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "econ/stats.hpp"

namespace econ {

AnnualSeries trend_growth(const AnnualSeries& gdp_pc, double increment) {
  if (increment <= 0.0) {
    throw DomainError("trend increment must be positive");
  }
  if ((gdp_pc.values().array() <= 0.0).any()) {
    throw DomainError("GDP per capita must be strictly positive");
  }
  return AnnualSeries(gdp_pc.start_year(), increment / gdp_pc.values().array(), "1/year");
}

AnnualSeries implied_growth(const AnnualSeries& cohort, const AnnualSeries& gdp_pc,
                            double increment) {
  if (!same_span(cohort, gdp_pc)) {
    throw AlignmentError("cohort and GDP series must share the same year span");
  }
  if ((cohort.values().array() <= 0.0).any() || (gdp_pc.values().array() <= 0.0).any()) {
    throw DomainError("implied_growth requires strictly positive inputs");
  }
  const Eigen::Index n = cohort.size() - 1;
  if (n < 1) {
    throw DegenerateInput("implied_growth needs at least two years");
  }
  Eigen::VectorXd g(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i) = 0.5 * (cohort[i + 1] - cohort[i]) / cohort[i] + increment / gdp_pc[i];
  }
  return AnnualSeries(cohort.start_year(), g, "1/year");
}

AnnualSeries predict_cohort(const AnnualSeries& growth, const AnnualSeries& gdp_pc,
                            const ModelParams& params) {
  if (params.trend_increment <= 0.0 || params.initial_population <= 0.0) {
    throw DomainError("model parameters must be positive");
  }
  if (growth.size() != gdp_pc.size() - 1 && growth.size() != gdp_pc.size()) {
    throw AlignmentError("growth and GDP series lengths are inconsistent");
  }
  if (growth.start_year() != gdp_pc.start_year()) {
    throw AlignmentError("growth and GDP series must start in the same year");
  }
  if (params.initial_year != growth.start_year()) {
    throw AlignmentError("initial year " + std::to_string(params.initial_year) +
                         " does not match first growth reading " +
                         std::to_string(growth.start_year()));
  }
  if ((gdp_pc.values().array() <= 0.0).any()) {
    throw DomainError("GDP per capita must be strictly positive");
  }

  const Eigen::Index steps = growth.size();
  Eigen::VectorXd n9(steps + 1);
  n9(0) = params.initial_population;
  for (Eigen::Index i = 0; i < steps; ++i) {
    const double factor = 1.0 + 2.0 * (growth[i] - params.trend_increment / gdp_pc[i]);
    if (factor <= 0.0) {
      throw ModelBreakdown("population update factor " + std::to_string(factor) +
                           " at year " + std::to_string(growth.year_at(i)));
    }
    n9(i + 1) = n9(i) * factor;
  }
  return AnnualSeries(params.initial_year, n9, "persons");
}

namespace {

// Cumulative product of the update factors with unit seed; the predicted
// series is linear in the initial population, which gives the zero-mean
// initial value in closed form.
std::optional<Eigen::VectorXd> unit_path(const AnnualSeries& growth,
                                         const AnnualSeries& gdp_pc, double increment) {
  const Eigen::Index steps = growth.size();
  Eigen::VectorXd w(steps + 1);
  w(0) = 1.0;
  for (Eigen::Index i = 0; i < steps; ++i) {
    const double factor = 1.0 + 2.0 * (growth[i] - increment / gdp_pc[i]);
    if (factor <= 0.0) {
      return std::nullopt;
    }
    w(i + 1) = w(i) * factor;
  }
  return w;
}

struct Objective {
  double rms = std::numeric_limits<double>::infinity();
  double initial_population = 0.0;
};

// RMS of measured - n0 * w over the comparison window, with n0 chosen so the
// mean difference is exactly zero.
Objective evaluate(const Eigen::VectorXd& measured, const AnnualSeries& growth,
                   const AnnualSeries& gdp_pc, double increment,
                   Eigen::Index offset, Eigen::Index count) {
  Objective obj;
  const auto w = unit_path(growth, gdp_pc, increment);
  if (!w) {
    return obj;
  }
  const Eigen::VectorXd wseg = w->segment(offset, count);
  const double wmean = wseg.mean();
  if (wmean <= 0.0) {
    return obj;
  }
  obj.initial_population = measured.mean() / wmean;
  obj.rms = rms(measured - obj.initial_population * wseg);
  return obj;
}

}  // namespace

FitReport calibrate(const AnnualSeries& growth, const AnnualSeries& gdp_pc,
                    const AnnualSeries& cohort_measured, int initial_year,
                    const CalibrationOptions& options) {
  if (growth.start_year() != initial_year || gdp_pc.start_year() != initial_year) {
    throw AlignmentError("growth and GDP series must start in the initial year");
  }
  if (options.increment_min <= 0.0 || options.increment_max <= options.increment_min) {
    throw DomainError("invalid calibration bounds");
  }

  // Comparison window: overlap of the prediction range with the measured series.
  const int pred_start = initial_year;
  const int pred_end = initial_year + static_cast<int>(growth.size());
  const int lo = std::max(pred_start, cohort_measured.start_year());
  const int hi = std::min(pred_end, cohort_measured.end_year());
  if (hi - lo + 1 < 5) {
    throw DegenerateInput("calibration needs at least 5 overlapping years");
  }
  const Eigen::Index offset = lo - pred_start;
  const Eigen::Index count = hi - lo + 1;
  const Eigen::VectorXd measured =
      cohort_measured.values().segment(lo - cohort_measured.start_year(), count);

  auto objective = [&](double a) {
    return evaluate(measured, growth, gdp_pc, a, offset, count);
  };

  // Coarse grid to bracket the optimum, then golden-section refinement.
  const int grid = std::max(options.grid_points, 8);
  double best_a = 0.0;
  double best_rms = std::numeric_limits<double>::infinity();
  int best_idx = -1;
  const double step = (options.increment_max - options.increment_min) / grid;
  for (int i = 0; i <= grid; ++i) {
    const double a = options.increment_min + step * i;
    const Objective obj = objective(a);
    if (obj.rms < best_rms) {
      best_rms = obj.rms;
      best_a = a;
      best_idx = i;
    }
  }
  if (!std::isfinite(best_rms)) {
    throw CalibrationError(
        "no admissible trend increment in [" + std::to_string(options.increment_min) +
        ", " + std::to_string(options.increment_max) +
        "]: every candidate drove the predicted population non-positive");
  }

  double lo_a = options.increment_min + step * std::max(best_idx - 1, 0);
  double hi_a = options.increment_min + step * std::min(best_idx + 1, grid);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi_a - inv_phi * (hi_a - lo_a);
  double x2 = lo_a + inv_phi * (hi_a - lo_a);
  double f1 = objective(x1).rms;
  double f2 = objective(x2).rms;
  for (int it = 0; it < options.refine_iterations && hi_a - lo_a > 1e-12 * hi_a; ++it) {
    if (f1 < f2) {
      hi_a = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi_a - inv_phi * (hi_a - lo_a);
      f1 = objective(x1).rms;
    } else {
      lo_a = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo_a + inv_phi * (hi_a - lo_a);
      f2 = objective(x2).rms;
    }
  }
  const double a_hat = 0.5 * (lo_a + hi_a);
  const Objective opt = objective(a_hat);
  if (!std::isfinite(opt.rms)) {
    throw CalibrationError("refinement left the admissible region near a=" +
                           std::to_string(a_hat));
  }

  FitReport report;
  report.params = ModelParams{a_hat, opt.initial_population, initial_year};
  const auto w = unit_path(growth, gdp_pc, a_hat);
  const Eigen::VectorXd residual =
      measured - opt.initial_population * w->segment(offset, count);
  report.mean_difference = residual.mean();
  report.sd_difference = stddev(residual);
  report.rms_difference = rms(residual);
  report.sample_start = lo;
  report.sample_end = hi;
  if (std::abs(report.mean_difference) > 0.5) {
    throw CalibrationError("zero-mean solve left mean residual " +
                           std::to_string(report.mean_difference));
  }
  return report;
}

}  // namespace econ
