#include "tsbreak/arima/forecast.hpp"

#include <cmath>

#include "tsbreak/errors.hpp"

namespace tsbreak::arima {

namespace {

// Full autoregressive lag polynomial of the integrated model: coefficients
// a_i of x_t = sum a_i x_{t-i} + MA part, i.e. phi(z)(1-z)^d (1-z^s)^D
// written as 1 - sum a_i z^i.
std::vector<double> integrated_ar_lags(const ArimaModel& model) {
  ExpandedArma full = model.expanded();
  std::vector<double> poly(full.phi.size() + 1, 0.0);
  poly[0] = 1.0;
  for (std::size_t i = 0; i < full.phi.size(); ++i) poly[i + 1] = -full.phi[i];
  for (int r = 0; r < model.order.d; ++r) {
    poly = polynomial_multiply(poly, std::vector<double>{1.0, -1.0});
  }
  if (model.order.D > 0) {
    std::vector<double> seasonal(model.order.period + 1, 0.0);
    seasonal[0] = 1.0;
    seasonal[model.order.period] = -1.0;
    for (int r = 0; r < model.order.D; ++r) poly = polynomial_multiply(poly, seasonal);
  }
  std::vector<double> lags(poly.size() - 1);
  for (std::size_t i = 1; i < poly.size(); ++i) lags[i - 1] = -poly[i];
  return lags;
}

// Conditional innovations for the in-sample period, zero before the first
// index with full lag coverage.
std::vector<double> conditional_residuals(std::span<const double> centered,
                                          const std::vector<double>& a,
                                          const std::vector<double>& m) {
  std::vector<double> z(centered.size(), 0.0);
  for (std::size_t t = a.size(); t < centered.size(); ++t) {
    double pred = 0.0;
    for (std::size_t i = 1; i <= a.size(); ++i) pred += a[i - 1] * centered[t - i];
    for (std::size_t j = 1; j <= m.size() && j <= t; ++j) pred += m[j - 1] * z[t - j];
    z[t] = centered[t] - pred;
  }
  return z;
}

}  // namespace

std::vector<Forecast> forecast(const ArimaModel& model, int steps) {
  if (steps < 1) throw InvalidArgumentError("forecast needs steps >= 1");
  if (!model.fitted_series.has_value()) {
    throw InvalidArgumentError("forecast needs a model carrying its fitted series");
  }
  const std::vector<double>& raw = model.fitted_series->values();
  const double mu = model.order.include_mean ? model.mean : 0.0;
  std::vector<double> centered(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) centered[i] = raw[i] - mu;

  std::vector<double> a = integrated_ar_lags(model);
  ExpandedArma full = model.expanded();
  const std::vector<double>& m = full.theta;
  std::vector<double> z = conditional_residuals(centered, a, m);

  const std::size_t n = centered.size();
  std::vector<double> extended = centered;
  extended.resize(n + steps, 0.0);
  std::vector<double> z_ext = z;
  z_ext.resize(n + steps, 0.0);  // future innovations have zero mean

  std::vector<Forecast> out(steps);
  for (int h = 1; h <= steps; ++h) {
    const std::size_t t = n + h - 1;
    double pred = 0.0;
    for (std::size_t i = 1; i <= a.size() && i <= t; ++i) pred += a[i - 1] * extended[t - i];
    for (std::size_t j = 1; j <= m.size() && j <= t; ++j) pred += m[j - 1] * z_ext[t - j];
    extended[t] = pred;
    out[h - 1].mean = pred + mu;
  }

  // psi-weights of the integrated representation give the h-step error
  // variance sigma2 * sum_{j<h} psi_j^2.
  std::vector<double> psi(steps, 0.0);
  psi[0] = 1.0;
  for (int j = 1; j < steps; ++j) {
    double s = j <= static_cast<int>(m.size()) ? m[j - 1] : 0.0;
    for (std::size_t i = 1; i <= a.size() && i <= static_cast<std::size_t>(j); ++i) {
      s += a[i - 1] * psi[j - i];
    }
    psi[j] = s;
  }
  double acc = 0.0;
  for (int h = 1; h <= steps; ++h) {
    acc += psi[h - 1] * psi[h - 1];
    out[h - 1].variance = model.sigma2 * acc;
  }
  return out;
}

std::vector<double> one_step_predictions(const ArimaModel& model, std::span<const double> values,
                                         std::size_t first) {
  if (first >= values.size()) throw InvalidArgumentError("one_step_predictions: bad start index");
  const double mu = model.order.include_mean ? model.mean : 0.0;
  std::vector<double> centered(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) centered[i] = values[i] - mu;

  std::vector<double> a = integrated_ar_lags(model);
  ExpandedArma full = model.expanded();
  const std::vector<double>& m = full.theta;
  std::vector<double> z(centered.size(), 0.0);
  std::vector<double> pred(centered.size(), mu);
  for (std::size_t t = a.size(); t < centered.size(); ++t) {
    double p = 0.0;
    for (std::size_t i = 1; i <= a.size(); ++i) p += a[i - 1] * centered[t - i];
    for (std::size_t j = 1; j <= m.size() && j <= t; ++j) p += m[j - 1] * z[t - j];
    z[t] = centered[t] - p;
    pred[t] = p + mu;
  }
  return std::vector<double>(pred.begin() + first, pred.end());
}

}  // namespace tsbreak::arima
