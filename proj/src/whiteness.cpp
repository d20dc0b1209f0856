#include "tsbreak/whiteness.hpp"

#include <algorithm>

#include "tsbreak/special_functions.hpp"
#include "tsbreak/stats.hpp"

namespace tsbreak {

WhitenessReport whiteness_test(std::span<const double> residuals, int h, int fitted_params) {
  const std::size_t n = residuals.size();
  if (fitted_params < 0) throw InvalidArgumentError("fitted_params must be >= 0");
  if (h <= fitted_params) {
    throw InvalidArgumentError("whiteness test needs h > fitted_params (h=" + std::to_string(h) +
                               ", k=" + std::to_string(fitted_params) + ")");
  }
  if (n <= static_cast<std::size_t>(h) + 1) {
    throw InsufficientDataError("whiteness test needs n > h + 1");
  }

  CorrelationSequence rho = acf(residuals, h);
  double q = 0.0;
  for (int k = 1; k <= h; ++k) q += rho.values[k] * rho.values[k];
  q *= static_cast<double>(n);
  q += static_cast<double>(h) * (h + 1) / (2.0 * static_cast<double>(n));

  WhitenessReport report;
  report.statistic = q;
  report.lags_used = h;
  report.fitted_params = fitted_params;
  report.degrees_of_freedom = h - fitted_params;
  report.p_value = chi_square_upper_tail(q, static_cast<double>(report.degrees_of_freedom));
  return report;
}

WhitenessReport whiteness_test(const TimeSeries& residuals, int h, int fitted_params) {
  return whiteness_test(residuals.span(), h, fitted_params);
}

int default_whiteness_lags(std::size_t n, int fitted_params) {
  int h = std::min<int>(20, static_cast<int>(n / 5));
  h = std::max(h, fitted_params + 1);
  if (n <= static_cast<std::size_t>(h) + 1) return 0;
  return h;
}

}  // namespace tsbreak
