#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "econ/series.hpp"

namespace econ {

enum class TrendSpec { none, constant, trend };

enum class UnitRootTest { adf, dfgls };

enum class SignificanceLevel { pct1, pct5, pct10 };

const char* to_string(TrendSpec t);
const char* to_string(UnitRootTest t);
double to_fraction(SignificanceLevel level);  // 0.01 / 0.05 / 0.10

struct UnitRootResult {
  double statistic = 0.0;
  int lag = 0;
  TrendSpec trend = TrendSpec::none;
  std::map<SignificanceLevel, double> critical_values;
  std::optional<SignificanceLevel> reject_at;  // strongest level rejected
  int n_obs = 0;                               // effective regression sample
};

// Augmented Dickey-Fuller t-test: regression of the first difference on the
// lagged level, `lag` lagged differences, and the deterministic terms implied
// by `trend`. The statistic is the t-ratio on the lagged level.
UnitRootResult adf_test(const AnnualSeries& s, int lag, TrendSpec trend);

// Elliott-Rothenberg-Stock DF-GLS: the series is GLS-detrended by
// quasi-differencing with cbar = -7 (constant) or -13.5 (trend), then the
// Dickey-Fuller regression with `lag` augmentation terms and no deterministic
// terms is run on the detrended series. Requires lag >= 1 and a trend
// specification other than none.
UnitRootResult dfgls_test(const AnnualSeries& s, int lag, TrendSpec trend);

// Finite-sample critical value interpolated at the effective sample size.
// ADF values come from the MacKinnon (2010) response surfaces; DF-GLS values
// from tables simulated with the Monte-Carlo engine below (400k replications
// per grid point, frozen in source).
double critical_value(UnitRootTest test, TrendSpec trend, int n_obs,
                      SignificanceLevel level);

// Empirical null quantile over `replications` driftless Gaussian random walks
// of length n_obs. Deterministic given the seed; per-replication substreams
// are derived from (seed, index) so execution order cannot matter. Serves as
// the audit oracle for the embedded tables.
double simulate_critical_value(UnitRootTest test, TrendSpec trend, int n_obs,
                               SignificanceLevel level, int replications,
                               std::uint64_t seed);

}  // namespace econ
