#pragma once

#include <complex>
#include <span>
#include <vector>

namespace tsbreak::arima {

/// Moduli of the roots of the AR polynomial 1 - phi_1 z - ... - phi_p z^p
/// and the MA polynomial 1 + theta_1 z + ... + theta_q z^q. Causal/invertible
/// means all respective moduli are strictly greater than one; empty
/// coefficient lists are vacuously admissible.
struct RootReport {
  std::vector<double> ar_root_moduli;
  std::vector<double> ma_root_moduli;
  bool causal = true;
  bool invertible = true;
};

RootReport check_roots(std::span<const double> phi, std::span<const double> theta);

/// Complex roots of c(z) = 1 + c_1 z + ... + c_k z^k (pass AR coefficients
/// negated). Trailing coefficients below 1e-12 are treated as zero.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> tail_coeffs);

/// Moduli of the same roots, sorted ascending.
std::vector<double> polynomial_root_moduli(std::span<const double> tail_coeffs);

/// Multiplies the regular and seasonal polynomials into plain ARMA
/// coefficient vectors of length p + s*P and q + s*Q. AR blocks use the
/// 1 - sum convention, MA blocks the 1 + sum convention, matching
/// multiplicative SARIMA.
struct ExpandedArma {
  std::vector<double> phi;
  std::vector<double> theta;
};
ExpandedArma expand_seasonal(std::span<const double> phi, std::span<const double> theta,
                             std::span<const double> seasonal_phi,
                             std::span<const double> seasonal_theta, int period);

/// Maps unconstrained reals to the coefficients of a causal AR block via
/// tanh partial autocorrelations (Barndorff-Nielsen/Schou). The image is
/// exactly the open causal region, so optimizer iterates always satisfy the
/// root conditions.
std::vector<double> pacf_to_ar(std::span<const double> raw);

/// Inverse of pacf_to_ar for admissible coefficient vectors.
std::vector<double> ar_to_pacf(std::span<const double> phi);

/// Polynomial product of (1, a_1, ..) and (1, b_1, ..) given as full
/// coefficient vectors including the leading 1.
std::vector<double> polynomial_multiply(std::span<const double> a, std::span<const double> b);

}  // namespace tsbreak::arima
