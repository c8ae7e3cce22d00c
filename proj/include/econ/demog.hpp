#pragma once

#include "econ/series.hpp"

namespace econ {

// Two-component growth model parameters: a constant annual increment of GDP
// per capita (dollars/person/year) and the defining-age cohort size seeding
// the recursion.
struct ModelParams {
  double trend_increment = 0.0;     // > 0
  double initial_population = 0.0;  // > 0, persons
  int initial_year = 0;
};

struct FitReport {
  ModelParams params;
  double mean_difference = 0.0;  // measured - predicted, persons
  double sd_difference = 0.0;
  double rms_difference = 0.0;
  int sample_start = 0;  // years over which the residual was evaluated
  int sample_end = 0;
};

// Options for calibrate(). Bounds bracket the trend increment search.
struct CalibrationOptions {
  double increment_min = 1.0;
  double increment_max = 10000.0;
  int grid_points = 200;
  int refine_iterations = 200;
};

// Background growth rate implied by a constant annual increment: a / G(t).
// Strictly decreasing whenever the level series increases.
AnnualSeries trend_growth(const AnnualSeries& gdp_pc, double increment);

// Growth rate of GDP per capita implied by the cohort series:
// 0.5 * (N(t+1) - N(t)) / N(t) + a / G(t). Result indexed at the base year.
AnnualSeries implied_growth(const AnnualSeries& cohort, const AnnualSeries& gdp_pc,
                            double increment);

// Discrete inversion: N(t+1) = N(t) * (1 + 2 * (g(t) - a / G(t))), seeded at
// params.initial_population in params.initial_year. One step per growth
// reading; throws ModelBreakdown if a bracket factor drops to zero or below.
AnnualSeries predict_cohort(const AnnualSeries& growth, const AnnualSeries& gdp_pc,
                            const ModelParams& params);

// Fit (increment, initial population) to a measured cohort series: for each
// candidate increment the initial population has a closed form enforcing a
// zero mean residual, and the increment minimizes the residual RMS over a
// grid plus golden-section refinement. Deterministic.
FitReport calibrate(const AnnualSeries& growth, const AnnualSeries& gdp_pc,
                    const AnnualSeries& cohort_measured, int initial_year,
                    const CalibrationOptions& options = {});

}  // namespace econ
