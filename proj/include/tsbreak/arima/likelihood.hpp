#pragma once

#include <span>
#include <vector>

namespace tsbreak::arima {

/// Autocovariances gamma(0..max_lag) of the causal ARMA process
/// phi(B) X = theta(B) Z with unit innovation variance.
std::vector<double> arma_acvf(std::span<const double> phi, std::span<const double> theta,
                              int max_lag);

/// Innovations-recursion pass over a (differenced, centered) series:
/// one-step prediction errors u_t with error-variance ratios v_t such that
/// Var(u_t) = sigma2 * v_{t}. sigma2 profiles out analytically.
struct InnovationsResult {
  double sum_sq = 0.0;        // sum u_t^2 / v_t
  double sum_log_v = 0.0;     // sum log v_t
  double sigma2_hat = 0.0;    // sum_sq / n
  double loglik = 0.0;        // profile log-likelihood at sigma2_hat
  std::vector<double> residuals;  // u_t / sqrt(v_t); variance sigma2
};

/// Exact Gaussian likelihood pieces for an ARMA model on `x` (already
/// differenced and centered). Throws NumericalError if a prediction
/// variance degenerates.
InnovationsResult arma_innovations(std::span<const double> phi, std::span<const double> theta,
                                   std::span<const double> x, bool want_residuals);

/// Log-likelihood at a fixed innovation variance (used by oracle tests).
double arma_loglik_at(std::span<const double> phi, std::span<const double> theta,
                      std::span<const double> x, double sigma2);

/// Conditional sum of squares: mean squared one-step error of the
/// recursion started from zero initial conditions. Fast surrogate used to
/// initialize the exact-likelihood optimizer.
double arma_css(std::span<const double> phi, std::span<const double> theta,
                std::span<const double> x);

}  // namespace tsbreak::arima
