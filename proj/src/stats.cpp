#include "tsbreak/stats.hpp"

#include <algorithm>
#include <cmath>

namespace tsbreak {

double CorrelationSequence::at_lag(int lag) const {
  for (std::size_t i = 0; i < lags.size(); ++i) {
    if (lags[i] == lag) return values[i];
  }
  throw InvalidArgumentError("lag " + std::to_string(lag) + " not present");
}

double sample_mean(std::span<const double> values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  double mean = sample_mean(values);
  double s = 0.0;
  for (double v : values) s += (v - mean) * (v - mean);
  return s / static_cast<double>(values.size());
}

CorrelationSequence acvf(std::span<const double> x, int max_lag) {
  const std::size_t n = x.size();
  if (n < 2) {
    throw InsufficientDataError("acvf needs at least 2 observations");
  }
  if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n) {
    throw InvalidArgumentError("max_lag must satisfy 0 <= max_lag < n");
  }
  const double mean = sample_mean(x);
  CorrelationSequence out;
  out.kind = CorrelationKind::ACVF;
  out.n = n;
  out.lags.resize(max_lag + 1);
  out.values.resize(max_lag + 1);
  for (int h = 0; h <= max_lag; ++h) {
    double s = 0.0;
    for (std::size_t t = 0; t + h < n; ++t) {
      s += (x[t] - mean) * (x[t + h] - mean);
    }
    out.lags[h] = h;
    out.values[h] = s / static_cast<double>(n);
  }
  return out;
}

CorrelationSequence acf(std::span<const double> x, int max_lag) {
  CorrelationSequence g = acvf(x, max_lag);
  if (g.values[0] <= 0.0) {
    throw DegenerateSeriesError("zero-variance series has no autocorrelation");
  }
  CorrelationSequence out;
  out.kind = CorrelationKind::ACF;
  out.n = g.n;
  out.lags = g.lags;
  out.values.resize(g.values.size());
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    out.values[i] = g.values[i] / g.values[0];
  }
  return out;
}

CorrelationSequence pacf(std::span<const double> x, int max_lag) {
  if (max_lag < 1) {
    throw InvalidArgumentError("pacf needs max_lag >= 1");
  }
  CorrelationSequence rho = acf(x, max_lag);

  // Durbin-Levinson: phi[k][k] is the lag-k partial autocorrelation.
  CorrelationSequence out;
  out.kind = CorrelationKind::PACF;
  out.n = rho.n;
  std::vector<double> phi_prev(max_lag + 1, 0.0), phi_cur(max_lag + 1, 0.0);
  double v = 1.0;  // prediction error variance ratio
  for (int k = 1; k <= max_lag; ++k) {
    double num = rho.values[k];
    for (int j = 1; j < k; ++j) num -= phi_prev[j] * rho.values[k - j];
    if (v <= 0.0 || !std::isfinite(v)) {
      throw NumericalError("Durbin-Levinson breakdown at lag " + std::to_string(k));
    }
    double a = num / v;
    phi_cur[k] = a;
    for (int j = 1; j < k; ++j) phi_cur[j] = phi_prev[j] - a * phi_prev[k - j];
    v *= (1.0 - a * a);
    std::copy(phi_cur.begin(), phi_cur.begin() + k + 1, phi_prev.begin());
    out.lags.push_back(k);
    out.values.push_back(a);
  }
  return out;
}

std::vector<double> rolling_mean(std::span<const double> x, int window) {
  const std::size_t n = x.size();
  if (window < 1 || static_cast<std::size_t>(window) > n) {
    throw InvalidArgumentError("window must satisfy 1 <= window <= n");
  }
  // Windows here are small (typically 7 days); summing each one directly
  // avoids running-sum drift over long series.
  std::vector<double> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t len = std::min<std::size_t>(t + 1, window);
    double s = 0.0;
    for (std::size_t j = t + 1 - len; j <= t; ++j) s += x[j];
    out[t] = s / static_cast<double>(len);
  }
  return out;
}

CorrelationSequence acvf(const TimeSeries& series, int max_lag) { return acvf(series.span(), max_lag); }
CorrelationSequence acf(const TimeSeries& series, int max_lag) { return acf(series.span(), max_lag); }
CorrelationSequence pacf(const TimeSeries& series, int max_lag) { return pacf(series.span(), max_lag); }

TimeSeries rolling_mean(const TimeSeries& series, int window) {
  return TimeSeries(rolling_mean(series.span(), window), series.start_date(), series.frequency());
}

}  // namespace tsbreak
