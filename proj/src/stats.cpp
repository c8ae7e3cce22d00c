#include "econ/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "econ/errors.hpp"

namespace econ {

namespace {

// Series expansion of P(a,x), converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) {
      break;
    }
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), converges fast for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / 1e-30;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      break;
    }
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) {
    throw DomainError("gamma_p requires a > 0, x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) {
    throw DomainError("gamma_q requires a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_squared_cdf(double x, double df) {
  if (x <= 0.0) return 0.0;
  return gamma_p(df / 2.0, x / 2.0);
}

double chi_squared_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  return gamma_q(df / 2.0, x / 2.0);
}

double mean(const Eigen::VectorXd& v) {
  if (v.size() == 0) throw DegenerateInput("mean of empty vector");
  return v.mean();
}

double variance(const Eigen::VectorXd& v) {
  const double m = mean(v);
  return (v.array() - m).square().mean();
}

double stddev(const Eigen::VectorXd& v) { return std::sqrt(variance(v)); }

double rms(const Eigen::VectorXd& v) {
  if (v.size() == 0) throw DegenerateInput("rms of empty vector");
  return std::sqrt(v.array().square().mean());
}

double skewness(const Eigen::VectorXd& v) {
  const double m = mean(v);
  const auto c = v.array() - m;
  const double m2 = c.square().mean();
  if (m2 <= 0.0) throw DegenerateInput("skewness of zero-variance sample");
  const double m3 = c.cube().mean();
  return m3 / std::pow(m2, 1.5);
}

double kurtosis(const Eigen::VectorXd& v) {
  const double m = mean(v);
  const auto c = v.array() - m;
  const double m2 = c.square().mean();
  if (m2 <= 0.0) throw DegenerateInput("kurtosis of zero-variance sample");
  const double m4 = c.square().square().mean();
  return m4 / (m2 * m2);
}

double quantile(Eigen::VectorXd v, double p) {
  if (v.size() == 0) throw DegenerateInput("quantile of empty vector");
  if (p < 0.0 || p > 1.0) throw DomainError("quantile level outside [0,1]");
  std::sort(v.data(), v.data() + v.size());
  const double pos = p * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<Eigen::Index>(std::floor(pos));
  const auto hi = static_cast<Eigen::Index>(std::ceil(pos));
  const double w = pos - static_cast<double>(lo);
  return (1.0 - w) * v(lo) + w * v(hi);
}

}  // namespace econ
