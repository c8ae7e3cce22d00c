#pragma once

#include <Eigen/Dense>
#include <string>

#include "econ/errors.hpp"

namespace econ {

// Year-indexed sequence of finite real values. Element i belongs to calendar
// year start_year + i; the sequence is contiguous by construction.
class AnnualSeries {
public:
  AnnualSeries(int start_year, Eigen::VectorXd values, std::string unit = "");

  int start_year() const { return start_year_; }
  int end_year() const { return start_year_ + static_cast<int>(values_.size()) - 1; }
  Eigen::Index size() const { return values_.size(); }
  int year_at(Eigen::Index i) const { return start_year_ + static_cast<int>(i); }

  double operator[](Eigen::Index i) const { return values_(i); }
  double at_year(int year) const;

  const Eigen::VectorXd& values() const { return values_; }
  const std::string& unit() const { return unit_; }

  // Inclusive year range restriction. Throws DegenerateInput when the
  // intersection with [from, to] is empty.
  AnnualSeries slice_years(int from, int to) const;

private:
  int start_year_;
  Eigen::VectorXd values_;
  std::string unit_;
};

// Two series sharing an identical year range.
struct AlignedPair {
  AnnualSeries a;
  AnnualSeries b;
};

// Order-k difference; element i of the order-1 result is s[i+1] - s[i] and the
// start year advances by the order. Higher orders iterate the order-1 form.
AnnualSeries diff(const AnnualSeries& s, int order = 1);

// Shift the series k years forward in time: the result at year t holds s(t-k).
AnnualSeries lag(const AnnualSeries& s, int k);

// Trailing arithmetic mean; the result is indexed at each window's last year.
AnnualSeries moving_average(const AnnualSeries& s, int window);

// Forward relative growth (s[i+1] - s[i]) / s[i], indexed at the base year i.
// All values must be strictly positive. Unit of the result is "1/year".
AnnualSeries growth_rate(const AnnualSeries& s);

// Truncate both series to the intersection of their year ranges (>= 2 years).
AlignedPair align(const AnnualSeries& a, const AnnualSeries& b);

bool same_span(const AnnualSeries& a, const AnnualSeries& b);

}  // namespace econ
