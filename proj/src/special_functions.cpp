#include "tsbreak/special_functions.hpp"

#include <cmath>
#include <limits>

#include "tsbreak/errors.hpp"

namespace tsbreak {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;

// P(a,x) by the power series  x^a e^-x / Gamma(a) * sum x^n / (a)_{n+1}.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw NumericalError("incomplete gamma series failed to converge");
}

// Q(a,x) by the continued fraction (modified Lentz).
double gamma_q_cf(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
  }
  throw NumericalError("incomplete gamma continued fraction failed to converge");
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw InvalidArgumentError("regularized_gamma_p requires a > 0 and x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw InvalidArgumentError("regularized_gamma_q requires a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_upper_tail(double x, double df) {
  if (!(df > 0.0)) throw InvalidArgumentError("chi-square df must be > 0");
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace tsbreak
