#pragma once

#include <span>

#include "tsbreak/time_series.hpp"

namespace tsbreak {

/// Li-McLeod portmanteau test result. p >= 0.05 is reported as consistent
/// with white noise.
struct WhitenessReport {
  double statistic = 0.0;
  int lags_used = 0;      // h
  int fitted_params = 0;  // k, subtracted from the chi-square df
  int degrees_of_freedom = 0;
  double p_value = 1.0;

  bool consistent_with_white_noise() const { return p_value >= 0.05; }
};

/// Q_LM = n * sum_{k=1..h} rho_k^2 + h(h+1)/(2n), compared against the upper
/// tail of chi-square with h - fitted_params degrees of freedom.
WhitenessReport whiteness_test(const TimeSeries& residuals, int h, int fitted_params);
WhitenessReport whiteness_test(std::span<const double> residuals, int h, int fitted_params);

/// Default lag count: min(20, n/5), bumped to fitted_params+1 when that
/// floor would leave no degrees of freedom. Returns 0 if the series is too
/// short for any valid configuration.
int default_whiteness_lags(std::size_t n, int fitted_params);

}  // namespace tsbreak
