#include "tsbreak/arima/simulate.hpp"

#include <cmath>
#include <numbers>

#include "tsbreak/errors.hpp"

namespace tsbreak::arima {

double GaussianRng::next() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  // (0,1] uniforms from the top 53 bits; u1 stays away from zero so the log
  // is finite.
  double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

int default_burn_in(const ArimaOrder& order) {
  return 10 * (order.p + order.q + order.period * (order.P + order.Q) + 1);
}

TimeSeries simulate_with_rng(const ArimaModel& model, std::size_t n, GaussianRng& rng,
                             int burn_in, Date start_date) {
  if (n < 1) throw InvalidArgumentError("simulate needs n >= 1");
  if (model.sigma2 <= 0.0) throw InvalidModelError("simulate needs sigma2 > 0");
  ExpandedArma full = model.expanded();
  RootReport roots = check_roots(full.phi, full.theta);
  if (!roots.causal) throw InvalidModelError("cannot simulate a non-causal model");

  if (burn_in == kDefaultBurnIn) burn_in = default_burn_in(model.order);
  if (burn_in < 0) throw InvalidArgumentError("burn_in must be >= 0");

  const std::size_t p = full.phi.size();
  const std::size_t q = full.theta.size();
  const std::size_t total = burn_in + n;
  const double sd = std::sqrt(model.sigma2);

  std::vector<double> z(total), x(total);
  for (std::size_t t = 0; t < total; ++t) z[t] = sd * rng.next();
  for (std::size_t t = 0; t < total; ++t) {
    double v = z[t];
    for (std::size_t i = 1; i <= p && i <= t; ++i) v += full.phi[i - 1] * x[t - i];
    for (std::size_t j = 1; j <= q && j <= t; ++j) v += full.theta[j - 1] * z[t - j];
    x[t] = v;
  }

  std::vector<double> out(x.end() - n, x.end());
  if (model.order.include_mean && model.mean != 0.0) {
    for (double& v : out) v += model.mean;
  }

  // Integration: cumulative sums seeded from the first retained value, so
  // differencing the output recovers the stationary draw (minus its first
  // few elements).
  for (int rep = 0; rep < model.order.D; ++rep) {
    for (std::size_t t = model.order.period; t < out.size(); ++t) {
      out[t] += out[t - model.order.period];
    }
  }
  for (int rep = 0; rep < model.order.d; ++rep) {
    for (std::size_t t = 1; t < out.size(); ++t) out[t] += out[t - 1];
  }

  return TimeSeries(std::move(out), start_date);
}

TimeSeries simulate(const ArimaModel& model, std::size_t n, std::uint64_t seed, int burn_in,
                    Date start_date) {
  GaussianRng rng(seed);
  return simulate_with_rng(model, n, rng, burn_in, start_date);
}

}  // namespace tsbreak::arima
