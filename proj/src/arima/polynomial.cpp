#include "tsbreak/arima/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "tsbreak/errors.hpp"

namespace tsbreak::arima {

std::vector<std::complex<double>> polynomial_roots(std::span<const double> tail_coeffs) {
  int degree = static_cast<int>(tail_coeffs.size());
  while (degree > 0 && std::abs(tail_coeffs[degree - 1]) < 1e-12) --degree;
  if (degree == 0) return {};

  // Companion matrix of z^k + (c_{k-1}/c_k) z^{k-1} + ... + (1/c_k); its
  // eigenvalues are the polynomial roots.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  const double lead = tail_coeffs[degree - 1];
  companion(0, degree - 1) = -1.0 / lead;
  for (int i = 1; i < degree; ++i) {
    companion(0, degree - 1 - i) = -tail_coeffs[i - 1] / lead;
    companion(i, i - 1) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("polynomial root solve failed");
  }
  std::vector<std::complex<double>> roots(degree);
  for (int i = 0; i < degree; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

std::vector<double> polynomial_root_moduli(std::span<const double> tail_coeffs) {
  std::vector<std::complex<double>> roots = polynomial_roots(tail_coeffs);
  std::vector<double> moduli(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) moduli[i] = std::abs(roots[i]);
  std::sort(moduli.begin(), moduli.end());
  return moduli;
}

RootReport check_roots(std::span<const double> phi, std::span<const double> theta) {
  RootReport report;
  std::vector<double> ar_tail(phi.begin(), phi.end());
  for (double& c : ar_tail) c = -c;  // 1 - sum phi z^i
  report.ar_root_moduli = polynomial_root_moduli(ar_tail);
  report.ma_root_moduli = polynomial_root_moduli(theta);  // 1 + sum theta z^i
  for (double m : report.ar_root_moduli) {
    if (m <= 1.0) report.causal = false;
  }
  for (double m : report.ma_root_moduli) {
    if (m <= 1.0) report.invertible = false;
  }
  return report;
}

std::vector<double> polynomial_multiply(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

ExpandedArma expand_seasonal(std::span<const double> phi, std::span<const double> theta,
                             std::span<const double> seasonal_phi,
                             std::span<const double> seasonal_theta, int period) {
  ExpandedArma out;
  out.phi.assign(phi.size() + period * seasonal_phi.size(), 0.0);
  out.theta.assign(theta.size() + period * seasonal_theta.size(), 0.0);

  std::copy(phi.begin(), phi.end(), out.phi.begin());
  for (std::size_t j = 0; j < seasonal_phi.size(); ++j) {
    out.phi[(j + 1) * period - 1] += seasonal_phi[j];
    for (std::size_t i = 0; i < phi.size(); ++i) {
      out.phi[(j + 1) * period + i] -= phi[i] * seasonal_phi[j];
    }
  }
  std::copy(theta.begin(), theta.end(), out.theta.begin());
  for (std::size_t j = 0; j < seasonal_theta.size(); ++j) {
    out.theta[(j + 1) * period - 1] += seasonal_theta[j];
    for (std::size_t i = 0; i < theta.size(); ++i) {
      out.theta[(j + 1) * period + i] += theta[i] * seasonal_theta[j];
    }
  }
  return out;
}

std::vector<double> pacf_to_ar(std::span<const double> raw) {
  const std::size_t p = raw.size();
  std::vector<double> cur(p), work(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = std::tanh(raw[i]);
  // Levinson step: extend the causal block one lag at a time.
  for (std::size_t j = 1; j < p; ++j) {
    std::copy(cur.begin(), cur.begin() + j, work.begin());
    for (std::size_t k = 0; k < j; ++k) {
      work[k] -= cur[j] * cur[j - k - 1];
    }
    std::copy(work.begin(), work.begin() + j, cur.begin());
  }
  return cur;
}

std::vector<double> ar_to_pacf(std::span<const double> phi) {
  const std::size_t p = phi.size();
  std::vector<double> cur(phi.begin(), phi.end()), work(p);
  for (std::size_t j = p; j-- > 1;) {
    double a = cur[j];
    double denom = 1.0 - a * a;
    if (denom <= 0.0) {
      throw InvalidArgumentError("ar_to_pacf: coefficients not strictly causal");
    }
    for (std::size_t k = 0; k < j; ++k) {
      work[k] = (cur[k] + a * cur[j - k - 1]) / denom;
    }
    std::copy(work.begin(), work.begin() + j, cur.begin());
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (cur[i] <= -1.0 || cur[i] >= 1.0) {
      throw InvalidArgumentError("ar_to_pacf: partial autocorrelation out of (-1,1)");
    }
    cur[i] = std::atanh(cur[i]);
  }
  return cur;
}

}  // namespace tsbreak::arima
