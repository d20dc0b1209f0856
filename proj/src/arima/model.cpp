#include "tsbreak/arima/model.hpp"

#include <cmath>

#include "tsbreak/errors.hpp"

namespace tsbreak::arima {

InformationCriteria information_criteria(double loglik, int k, std::size_t n) {
  if (k < 0) throw InvalidArgumentError("parameter count must be >= 0");
  if (n <= static_cast<std::size_t>(k) + 1) {
    throw InvalidArgumentError("information criteria need n > k + 1");
  }
  InformationCriteria out;
  out.aic = -2.0 * loglik + 2.0 * k;
  out.aicc = out.aic + 2.0 * k * (k + 1.0) / (static_cast<double>(n) - k - 1.0);
  out.bic = -2.0 * loglik + k * std::log(static_cast<double>(n));
  return out;
}

RootReport ArimaModel::root_report() const {
  ExpandedArma full = expanded();
  return check_roots(full.phi, full.theta);
}

ExpandedArma ArimaModel::expanded() const {
  return expand_seasonal(phi, theta, seasonal_phi, seasonal_theta, order.period);
}

ArimaModel ArimaModel::arma(std::vector<double> phi, std::vector<double> theta, double sigma2,
                            double mean) {
  ArimaModel m;
  m.order = ArimaOrder(static_cast<int>(phi.size()), 0, static_cast<int>(theta.size()));
  m.order.include_mean = mean != 0.0;
  m.phi = std::move(phi);
  m.theta = std::move(theta);
  m.mean = mean;
  m.sigma2 = sigma2;
  return m;
}

}  // namespace tsbreak::arima
