#include "tsbreak/arima/likelihood.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "tsbreak/errors.hpp"

namespace tsbreak::arima {

namespace {

// psi-weights (MA(infinity) coefficients) up to index `count`.
std::vector<double> psi_weights(std::span<const double> phi, std::span<const double> theta,
                                int count) {
  std::vector<double> psi(count + 1, 0.0);
  psi[0] = 1.0;
  for (int j = 1; j <= count; ++j) {
    double s = j <= static_cast<int>(theta.size()) ? theta[j - 1] : 0.0;
    int upper = std::min<int>(j, static_cast<int>(phi.size()));
    for (int i = 1; i <= upper; ++i) s += phi[i - 1] * psi[j - i];
    psi[j] = s;
  }
  return psi;
}

}  // namespace

std::vector<double> arma_acvf(std::span<const double> phi, std::span<const double> theta,
                              int max_lag) {
  const int p = static_cast<int>(phi.size());
  const int q = static_cast<int>(theta.size());
  std::vector<double> psi = psi_weights(phi, theta, q);

  auto theta_at = [&](int j) { return j == 0 ? 1.0 : (j <= q ? theta[j - 1] : 0.0); };

  // Right-hand sides sum_{j=k..q} theta_j psi_{j-k} for k = 0..p.
  const int m = std::max(p + 1, 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  for (int k = 0; k <= p; ++k) {
    double s = 0.0;
    for (int j = k; j <= q; ++j) s += theta_at(j) * psi[j - k];
    rhs[k] = s;
  }

  // Linear system for gamma(0..p) from the Yule-Walker-type equations
  // gamma(k) - sum_i phi_i gamma(|k-i|) = rhs_k.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k <= p; ++k) {
    A(k, k) += 1.0;
    for (int i = 1; i <= p; ++i) {
      A(k, std::abs(k - i)) -= phi[i - 1];
    }
  }
  Eigen::VectorXd head = A.colPivHouseholderQr().solve(rhs);
  if (!head.allFinite()) {
    throw NumericalError("ARMA autocovariance system is singular (non-causal parameters?)");
  }

  std::vector<double> gamma(max_lag + 1, 0.0);
  for (int k = 0; k <= std::min(max_lag, p); ++k) gamma[k] = head[k];
  for (int k = p + 1; k <= max_lag; ++k) {
    double s = 0.0;
    for (int i = 1; i <= p; ++i) s += phi[i - 1] * gamma[k - i];
    if (k <= q) {
      for (int j = k; j <= q; ++j) s += theta_at(j) * psi[j - k];
    }
    gamma[k] = s;
  }
  return gamma;
}

InnovationsResult arma_innovations(std::span<const double> phi, std::span<const double> theta,
                                   std::span<const double> x, bool want_residuals) {
  const int p = static_cast<int>(phi.size());
  const int q = static_cast<int>(theta.size());
  const int m = std::max(p, q);
  const int n = static_cast<int>(x.size());
  if (n == 0) throw InsufficientDataError("likelihood needs a non-empty series");

  std::vector<double> gamma = arma_acvf(phi, theta, 2 * m + q + 1);
  auto theta_at = [&](int j) { return j == 0 ? 1.0 : (j <= q ? theta[j - 1] : 0.0); };

  // Covariance kernel of the transformed process W (Brockwell-Davis style):
  // raw autocovariances while both indices are at most m, innovation-filtered
  // values across the boundary, and a pure MA band beyond it.
  auto kappa = [&](int i, int j) -> double {  // 1-based, i >= j
    const int lag = i - j;
    if (i <= m) return gamma[lag];
    if (j <= m) {
      if (i > 2 * m && lag > q) return 0.0;
      double s = gamma[lag];
      for (int r = 1; r <= p; ++r) s -= phi[r - 1] * gamma[std::abs(r - lag)];
      return s;
    }
    if (lag > q) return 0.0;
    double s = 0.0;
    for (int r = 0; r + lag <= q; ++r) s += theta_at(r) * theta_at(r + lag);
    return s;
  };

  // Row t holds the innovation coefficients theta_{t,1..w_t} where the
  // width is t while t < m and q afterwards (the band structure of kappa
  // zeroes everything further out). One flat allocation keeps the recursion
  // cheap enough to sit inside an optimizer loop.
  const int stride = std::max(m, 1);
  std::vector<double> rows(static_cast<std::size_t>(n) * stride, 0.0);
  std::vector<double> v(n), xhat(n, 0.0);
  auto row_width = [&](int t) { return t < m ? t : q; };
  auto theta_row = [&](int t, int j) -> double {  // theta_{t,j}
    if (j < 1 || j > row_width(t)) return 0.0;
    return rows[static_cast<std::size_t>(t) * stride + j - 1];
  };

  v[0] = kappa(1, 1);
  InnovationsResult out;
  if (want_residuals) out.residuals.resize(n);

  auto accumulate = [&](int t) {
    if (v[t] <= 0.0 || !std::isfinite(v[t])) {
      throw NumericalError("non-positive innovation variance in likelihood recursion");
    }
    double u = x[t] - xhat[t];
    out.sum_sq += u * u / v[t];
    out.sum_log_v += std::log(v[t]);
    if (want_residuals) out.residuals[t] = u / std::sqrt(v[t]);
  };
  accumulate(0);

  for (int t = 1; t < n; ++t) {
    const int w = row_width(t);
    const int k_min = t < m ? 0 : t - q;
    for (int k = k_min; k < t; ++k) {
      // theta_{t,t-k}; skip positions outside this row's band.
      if (t - k > w) continue;
      double s = kappa(t + 1, k + 1);
      const int j_lo = std::max({0, k - row_width(k), t - w});
      for (int j = j_lo; j < k; ++j) {
        s -= theta_row(k, k - j) * theta_row(t, t - j) * v[j];
      }
      rows[static_cast<std::size_t>(t) * stride + (t - k - 1)] = s / v[k];
    }
    double vv = kappa(t + 1, t + 1);
    for (int j = std::max(0, t - w); j < t; ++j) {
      double c = theta_row(t, t - j);
      vv -= c * c * v[j];
    }
    v[t] = vv;

    if (t < m) {
      double s = 0.0;
      for (int j = 1; j <= t; ++j) s += theta_row(t, j) * (x[t - j] - xhat[t - j]);
      xhat[t] = s;
    } else {
      double s = 0.0;
      for (int i = 1; i <= p; ++i) s += phi[i - 1] * x[t - i];
      for (int j = 1; j <= q; ++j) s += theta_row(t, j) * (x[t - j] - xhat[t - j]);
      xhat[t] = s;
    }
    accumulate(t);
  }

  out.sigma2_hat = out.sum_sq / n;
  if (out.sigma2_hat <= 0.0 || !std::isfinite(out.sigma2_hat)) {
    throw NumericalError("degenerate innovation variance estimate");
  }
  out.loglik = -0.5 * n * (std::log(2.0 * std::numbers::pi * out.sigma2_hat) + 1.0) -
               0.5 * out.sum_log_v;
  return out;
}

double arma_loglik_at(std::span<const double> phi, std::span<const double> theta,
                      std::span<const double> x, double sigma2) {
  if (sigma2 <= 0.0) throw InvalidArgumentError("sigma2 must be > 0");
  InnovationsResult r = arma_innovations(phi, theta, x, false);
  const double n = static_cast<double>(x.size());
  return -0.5 * n * std::log(2.0 * std::numbers::pi * sigma2) - 0.5 * r.sum_log_v -
         0.5 * r.sum_sq / sigma2;
}

double arma_css(std::span<const double> phi, std::span<const double> theta,
                std::span<const double> x) {
  const int p = static_cast<int>(phi.size());
  const int q = static_cast<int>(theta.size());
  const int n = static_cast<int>(x.size());
  if (n <= p) throw InsufficientDataError("series too short for conditional sum of squares");
  std::vector<double> e(n, 0.0);
  double ssq = 0.0;
  int count = 0;
  for (int t = p; t < n; ++t) {
    double r = x[t];
    for (int i = 1; i <= p; ++i) r -= phi[i - 1] * x[t - i];
    for (int j = 1; j <= std::min(q, t - p); ++j) r -= theta[j - 1] * e[t - j];
    e[t] = r;
    ssq += r * r;
    ++count;
  }
  if (count == 0) throw InsufficientDataError("no usable observations for CSS");
  return ssq / count;
}

}  // namespace tsbreak::arima
