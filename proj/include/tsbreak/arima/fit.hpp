#pragma once

#include <span>

#include "tsbreak/arima/model.hpp"
#include "tsbreak/errors.hpp"

namespace tsbreak::arima {

/// Thrown when no optimizer restart reached the convergence tolerance.
/// Carries the best iterate found.
class FitConvergenceError : public ConvergenceError {
 public:
  FitConvergenceError(const std::string& what, ArimaModel best)
      : ConvergenceError(what), best_model(std::move(best)) {}
  ArimaModel best_model;
};

/// Exact Gaussian maximum likelihood over coefficients reparametrized
/// through tanh partial autocorrelations per AR/MA block, so every
/// optimizer iterate is causal and invertible. CSS serves as a fast
/// pre-stage when configured.
ArimaModel fit(const TimeSeries& series, ArimaOrder order, const FitConfig& config = {});

/// Profile Gaussian log-likelihood (sigma2 maximized out analytically) of a
/// coefficient vector on an already-differenced series. Layout of params:
/// phi(p), theta(q), seasonal phi(P), seasonal theta(Q), then mean when
/// order.include_mean.
double loglikelihood(const ArimaOrder& order, std::span<const double> params,
                     const TimeSeries& differenced_series);

}  // namespace tsbreak::arima
