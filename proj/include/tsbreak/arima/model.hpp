#pragma once

#include <optional>
#include <vector>

#include "tsbreak/arima/order.hpp"
#include "tsbreak/arima/polynomial.hpp"
#include "tsbreak/time_series.hpp"

namespace tsbreak::arima {

struct InformationCriteria {
  double aic = 0.0;
  double aicc = 0.0;
  double bic = 0.0;
};

/// AIC = -2 loglik + 2k, AICc = AIC + 2k(k+1)/(n-k-1), BIC = -2 loglik + k log n.
/// k counts estimated coefficients plus mean plus innovation variance.
InformationCriteria information_criteria(double loglik, int k, std::size_t n);

enum class EstimationMethod { CSS, CSSThenML };

struct FitConfig {
  int max_iterations = 2000;
  double convergence_tol = 1e-10;
  int optimizer_restarts = 3;
  EstimationMethod estimation = EstimationMethod::CSSThenML;
};

/// A fitted (or fully specified) SARIMA model.
struct ArimaModel {
  ArimaOrder order;
  std::vector<double> phi;             // AR coefficients
  std::vector<double> theta;           // MA coefficients
  std::vector<double> seasonal_phi;    // seasonal AR
  std::vector<double> seasonal_theta;  // seasonal MA
  double mean = 0.0;
  double sigma2 = 1.0;

  double loglik = 0.0;
  InformationCriteria criteria;
  /// Standardized one-step innovations, aligned with the differenced series.
  std::optional<TimeSeries> residuals;
  /// The series the model was fitted to; carried for forecasting.
  std::optional<TimeSeries> fitted_series;

  RootReport root_report() const;
  bool is_causal() const { return root_report().causal; }
  bool is_invertible() const { return root_report().invertible; }

  /// Multiplicative expansion into plain ARMA coefficient vectors.
  ExpandedArma expanded() const;

  /// Number of estimated parameters for information criteria (coefficients
  /// + mean when present + sigma2).
  int parameter_count() const {
    return order.num_coefficients() + (order.include_mean ? 1 : 0) + 1;
  }

  /// Shorthand for a non-seasonal model with explicit coefficients.
  static ArimaModel arma(std::vector<double> phi, std::vector<double> theta, double sigma2 = 1.0,
                         double mean = 0.0);
};

}  // namespace tsbreak::arima
