#pragma once

#include <vector>

#include "tsbreak/time_series.hpp"

namespace tsbreak {

/// Result of applying (1-B)^d (1-B^period)^D. Keeps the initial values each
/// stage consumed so integrate() can rebuild the original series.
struct DifferencedSeries {
  TimeSeries series;
  int d = 0;
  int seasonal_d = 0;
  int period = 1;
  /// One prefix per applied stage, in application order: d regular stages
  /// (1 value each), then seasonal stages (`period` values each).
  std::vector<std::vector<double>> initials;
};

/// Applies d regular differences followed by D seasonal differences at the
/// given period. Output length is n - d - D*period and the calendar start
/// shifts accordingly.
DifferencedSeries difference(const TimeSeries& series, int d, int seasonal_d, int period);

/// Inverse of difference(); exact up to compensated-summation rounding.
TimeSeries integrate(const DifferencedSeries& diffed);

/// Differenced values only (no cache), for likelihood evaluation.
std::vector<double> difference_values(std::span<const double> values, int d, int seasonal_d,
                                      int period);

}  // namespace tsbreak
