#pragma once

namespace tsbreak {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series expansion for x < a + 1, Lentz continued fraction otherwise;
/// absolute accuracy ~1e-14.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_upper_tail(double x, double df);

}  // namespace tsbreak
