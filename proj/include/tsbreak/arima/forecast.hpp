#pragma once

#include <vector>

#include "tsbreak/arima/model.hpp"

namespace tsbreak::arima {

struct Forecast {
  double mean = 0.0;
  double variance = 0.0;
};

/// Minimum-MSE linear predictions `steps` ahead of the fitted sample, with
/// prediction variances from the psi-weight (MA-infinity, including
/// integration) representation.
std::vector<Forecast> forecast(const ArimaModel& model, int steps);

/// One-step in-sample predictions of x[t] for t in [first, n) on the
/// original (undifferenced) scale, conditional on zero pre-sample
/// innovations. Used for rolling-origin forecast scoring.
std::vector<double> one_step_predictions(const ArimaModel& model,
                                         std::span<const double> values, std::size_t first);

}  // namespace tsbreak::arima
