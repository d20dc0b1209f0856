// Independent reference implementations used only by tests. Each one takes a
// brute-force or closed-form route that shares no code with the library path
// it checks.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracles {

// ---------------------------------------------------------------------------
// Chi-square upper tail by adaptive Simpson quadrature.
// Q(df, x) = 2^-a e^{-x/2} / Gamma(a) * J,  J = int_0^inf (x+s)^{a-1} e^{-s/2} ds
// with a = df/2. Factoring e^{-x/2} out keeps the integrand well scaled, so
// the relative accuracy of J carries through to the far tail.
// ---------------------------------------------------------------------------

namespace detail {

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double eps,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 60);
}

}  // namespace detail

inline double chi_square_upper_tail(double x, double df) {
  if (x <= 0.0) return 1.0;
  const double a = 0.5 * df;
  auto integrand = [&](double s) { return std::pow(x + s, a - 1.0) * std::exp(-0.5 * s); };
  // e^{-s/2} is below 1e-300 past s ~ 1400; integrate piecewise so the
  // adaptive rule concentrates effort near zero.
  double j = 0.0;
  double lo = 0.0;
  for (double hi : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0, 1500.0}) {
    j += detail::integrate(integrand, lo, hi, 1e-13 * std::max(j, integrand(lo)));
    lo = hi;
  }
  const double log_q = -0.5 * x + std::log(j) - a * std::log(2.0) - std::lgamma(a);
  return std::exp(log_q);
}

// ---------------------------------------------------------------------------
// Multivariate normal log-density with covariance built from explicit
// autocovariances: log N(x; 0, Gamma).
// ---------------------------------------------------------------------------

inline double mvn_logdensity(std::span<const double> x, const Eigen::MatrixXd& cov) {
  const Eigen::Index n = cov.rows();
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = x[i];
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw std::runtime_error("oracle covariance not PD");
  const Eigen::MatrixXd l = llt.matrixL();
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) logdet += 2.0 * std::log(l(i, i));
  const double quad = v.dot(llt.solve(v));
  return -0.5 * (n * std::log(2.0 * std::numbers::pi) + logdet + quad);
}

// Toeplitz covariance from autocovariances gamma(0..n-1).
inline Eigen::MatrixXd toeplitz(std::span<const double> gamma, int n) {
  Eigen::MatrixXd cov(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cov(i, j) = gamma[std::abs(i - j)];
  }
  return cov;
}

// AR(1) autocovariances sigma2 * phi^h / (1 - phi^2).
inline std::vector<double> ar1_acvf(double phi, double sigma2, int lags) {
  std::vector<double> g(lags + 1);
  g[0] = sigma2 / (1.0 - phi * phi);
  for (int h = 1; h <= lags; ++h) g[h] = g[h - 1] * phi;
  return g;
}

// MA(1) autocovariances: gamma0 = sigma2 (1 + theta^2), gamma1 = sigma2 theta.
inline std::vector<double> ma1_acvf(double theta, double sigma2, int lags) {
  std::vector<double> g(lags + 1, 0.0);
  g[0] = sigma2 * (1.0 + theta * theta);
  if (lags >= 1) g[1] = sigma2 * theta;
  return g;
}

// ---------------------------------------------------------------------------
// Exact 1-d total variation denoising (Condat's direct algorithm):
//   minimize (1/2) sum (y_i - x_i)^2 + lam * sum |x_{i+1} - x_i|.
// The result is KKT-verified before being returned, so a bug here cannot
// silently bless the solver under test.
// ---------------------------------------------------------------------------

inline std::vector<double> tv1d_exact(std::span<const double> y, double lam) {
  const int n = static_cast<int>(y.size());
  std::vector<double> x(n);
  if (n == 0) return x;
  if (n == 1 || lam <= 0.0) {
    for (int i = 0; i < n; ++i) x[i] = y[i];
    return x;
  }

  int k = 0, k0 = 0, km = 0, kp = 0;
  double vmin = y[0] - lam, vmax = y[0] + lam;
  double umin = lam, umax = -lam;
  while (true) {
    if (k == n - 1) {
      if (umin < 0.0) {
        do {
          x[k0++] = vmin;
        } while (k0 <= km);
        vmin = y[k0];
        k = km = k0;
        umin = lam;
        umax = vmin + lam - vmax;
        continue;
      }
      if (umax > 0.0) {
        do {
          x[k0++] = vmax;
        } while (k0 <= kp);
        vmax = y[k0];
        k = kp = k0;
        umax = -lam;
        umin = vmax - lam - vmin;
        continue;
      }
      vmin += umin / (k - k0 + 1);
      do {
        x[k0++] = vmin;
      } while (k0 <= k);
      break;
    }
    umin += y[k + 1] - vmin;
    if (umin < -lam) {
      do {
        x[k0++] = vmin;
      } while (k0 <= km);
      vmin = y[k0];
      vmax = vmin + 2.0 * lam;
      k = km = kp = k0;
      umin = lam;
      umax = -lam;
      continue;
    }
    umax += y[k + 1] - vmax;
    if (umax > lam) {
      do {
        x[k0++] = vmax;
      } while (k0 <= kp);
      vmax = y[k0];
      vmin = vmax - 2.0 * lam;
      k = km = kp = k0;
      umin = lam;
      umax = -lam;
      continue;
    }
    ++k;
    if (umin >= lam) {
      vmin += (umin - lam) / (k - k0 + 1);
      umin = lam;
      km = k;
    }
    if (umax <= -lam) {
      vmax += (umax + lam) / (k - k0 + 1);
      umax = -lam;
      kp = k;
    }
  }

  // KKT verification: z_i = sum_{j<=i} (y_j - x_j) must satisfy |z_i| <= lam,
  // z_i = -lam at upward jumps, +lam at downward jumps, z_n = 0.
  double z = 0.0;
  const double tol = 1e-8 * std::max(1.0, lam);
  for (int i = 0; i < n; ++i) {
    z += y[i] - x[i];
    if (i == n - 1) {
      if (std::abs(z) > tol) throw std::runtime_error("tv1d oracle: z_n != 0");
      break;
    }
    if (std::abs(z) > lam + tol) throw std::runtime_error("tv1d oracle: |z| > lam");
    if (x[i + 1] > x[i] + 1e-12 && std::abs(z + lam) > tol) {
      throw std::runtime_error("tv1d oracle: up-jump without z = -lam");
    }
    if (x[i + 1] < x[i] - 1e-12 && std::abs(z - lam) > tol) {
      throw std::runtime_error("tv1d oracle: down-jump without z = +lam");
    }
  }
  return x;
}

// Least-squares fit of y on columns of w (brute force via normal equations).
inline double lsq_sse(const Eigen::MatrixXd& w, const Eigen::VectorXd& y) {
  Eigen::VectorXd b = w.completeOrthogonalDecomposition().solve(y);
  return (y - w * b).squaredNorm();
}

}  // namespace oracles
