#include "econ/series.hpp"

#include <algorithm>

namespace econ {

AnnualSeries::AnnualSeries(int start_year, Eigen::VectorXd values, std::string unit)
    : start_year_(start_year), values_(std::move(values)), unit_(std::move(unit)) {
  if (values_.size() < 1) {
    throw DegenerateInput("AnnualSeries needs at least one value");
  }
  if (!values_.allFinite()) {
    throw DomainError("AnnualSeries values must be finite");
  }
}

double AnnualSeries::at_year(int year) const {
  if (year < start_year_ || year > end_year()) {
    throw AlignmentError("year " + std::to_string(year) + " outside series range " +
                         std::to_string(start_year_) + "-" + std::to_string(end_year()));
  }
  return values_(year - start_year_);
}

AnnualSeries AnnualSeries::slice_years(int from, int to) const {
  const int lo = std::max(from, start_year_);
  const int hi = std::min(to, end_year());
  if (lo > hi) {
    throw DegenerateInput("empty year range " + std::to_string(from) + "-" + std::to_string(to));
  }
  return AnnualSeries(lo, values_.segment(lo - start_year_, hi - lo + 1), unit_);
}

AnnualSeries diff(const AnnualSeries& s, int order) {
  if (order < 1) {
    throw DomainError("diff order must be positive");
  }
  if (order >= s.size()) {
    throw DegenerateInput("diff order " + std::to_string(order) + " >= series length " +
                          std::to_string(s.size()));
  }
  Eigen::VectorXd v = s.values();
  int year = s.start_year();
  for (int o = 0; o < order; ++o) {
    v = (v.tail(v.size() - 1) - v.head(v.size() - 1)).eval();
    ++year;
  }
  return AnnualSeries(year, v, s.unit());
}

AnnualSeries lag(const AnnualSeries& s, int k) {
  if (k < 1) {
    throw DomainError("lag must be positive");
  }
  if (k >= s.size()) {
    throw DegenerateInput("lag " + std::to_string(k) + " >= series length " +
                          std::to_string(s.size()));
  }
  return AnnualSeries(s.start_year() + k, s.values().head(s.size() - k), s.unit());
}

AnnualSeries moving_average(const AnnualSeries& s, int window) {
  if (window < 1) {
    throw DomainError("window must be positive");
  }
  if (window > s.size()) {
    throw DegenerateInput("window " + std::to_string(window) + " > series length " +
                          std::to_string(s.size()));
  }
  const Eigen::Index n = s.size() - window + 1;
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i) = s.values().segment(i, window).mean();
  }
  return AnnualSeries(s.start_year() + window - 1, out, s.unit());
}

AnnualSeries growth_rate(const AnnualSeries& s) {
  if (s.size() < 2) {
    throw DegenerateInput("growth_rate needs at least two values");
  }
  if ((s.values().array() <= 0.0).any()) {
    throw DomainError("growth_rate requires strictly positive values");
  }
  const Eigen::Index n = s.size() - 1;
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i) = (s[i + 1] - s[i]) / s[i];
  }
  return AnnualSeries(s.start_year(), out, "1/year");
}

AlignedPair align(const AnnualSeries& a, const AnnualSeries& b) {
  const int lo = std::max(a.start_year(), b.start_year());
  const int hi = std::min(a.end_year(), b.end_year());
  if (hi - lo + 1 < 2) {
    throw DegenerateInput("series overlap in fewer than 2 years");
  }
  return AlignedPair{a.slice_years(lo, hi), b.slice_years(lo, hi)};
}

bool same_span(const AnnualSeries& a, const AnnualSeries& b) {
  return a.start_year() == b.start_year() && a.size() == b.size();
}

}  // namespace econ
