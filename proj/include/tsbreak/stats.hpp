#pragma once

#include <span>
#include <vector>

#include "tsbreak/time_series.hpp"

namespace tsbreak {

enum class CorrelationKind { ACVF, ACF, PACF };

/// Sample correlation statistics per lag. ACVF/ACF lags run 0..max_lag,
/// PACF lags run 1..max_lag.
struct CorrelationSequence {
  CorrelationKind kind;
  std::vector<int> lags;
  std::vector<double> values;
  std::size_t n = 0;  // sample size the estimate is based on

  double at_lag(int lag) const;
};

/// Sample autocovariance with divisor n (keeps the sequence positive
/// semi-definite, which Durbin-Levinson requires).
CorrelationSequence acvf(const TimeSeries& series, int max_lag);
CorrelationSequence acvf(std::span<const double> values, int max_lag);

/// Sample autocorrelation rho(h) = gamma(h)/gamma(0).
CorrelationSequence acf(const TimeSeries& series, int max_lag);
CorrelationSequence acf(std::span<const double> values, int max_lag);

/// Partial autocorrelation via the Durbin-Levinson recursion on the sample
/// ACF; lag 1 equals the lag-1 autocorrelation exactly.
CorrelationSequence pacf(const TimeSeries& series, int max_lag);
CorrelationSequence pacf(std::span<const double> values, int max_lag);

/// Trailing mean over `window` observations; the first window-1 outputs
/// average over the shorter prefix so the output stays calendar-aligned
/// with the input.
TimeSeries rolling_mean(const TimeSeries& series, int window);
std::vector<double> rolling_mean(std::span<const double> values, int window);

double sample_mean(std::span<const double> values);
/// Biased (divisor n) sample variance.
double sample_variance(std::span<const double> values);

}  // namespace tsbreak
