#include <doctest.h>

#include <cmath>

#include "tsbreak/arima/fit.hpp"
#include "tsbreak/arima/forecast.hpp"
#include "tsbreak/arima/likelihood.hpp"
#include "tsbreak/arima/simulate.hpp"
#include "tsbreak/differencing.hpp"
#include "tsbreak/stats.hpp"

using namespace tsbreak;
using namespace tsbreak::arima;

TEST_CASE("simulated iid noise has unit variance at n=10000") {
  ArimaModel wn = ArimaModel::arma({}, {}, 1.0, 0.0);
  TimeSeries x = simulate(wn, 10000, 123);
  const double v = sample_variance(x.span());
  CHECK(v > 0.9);
  CHECK(v < 1.1);
}

TEST_CASE("simulated AR(1) has the right lag-one autocorrelation") {
  ArimaModel ar = ArimaModel::arma({0.5}, {});
  TimeSeries x = simulate(ar, 10000, 321);
  CorrelationSequence r = acf(x, 2);
  CHECK(r.values[1] > 0.47);
  CHECK(r.values[1] < 0.53);
}

TEST_CASE("differencing a d=1 simulation recovers the stationary draw") {
  ArimaModel wn = ArimaModel::arma({}, {});
  ArimaModel integrated = wn;
  integrated.order = ArimaOrder(0, 1, 0);
  const std::uint64_t seed = 777;
  TimeSeries walk = simulate(integrated, 300, seed);
  TimeSeries flat = simulate(wn, 300, seed);
  DifferencedSeries d = difference(walk, 1, 0, 1);
  REQUIRE(d.series.size() == 299);
  for (std::size_t i = 0; i < d.series.size(); ++i) {
    CHECK(d.series[i] == doctest::Approx(flat[i + 1]).epsilon(1e-12));
  }
}

TEST_CASE("simulate is bit-reproducible for a fixed seed") {
  ArimaModel m = ArimaModel::arma({0.4, 0.2}, {0.3}, 1.5);
  TimeSeries a = simulate(m, 500, 2024);
  TimeSeries b = simulate(m, 500, 2024);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  TimeSeries c = simulate(m, 500, 2025);
  bool any_different = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != c[i]) any_different = true;
  }
  CHECK(any_different);
}

TEST_CASE("simulate rejects a non-causal model") {
  ArimaModel bad = ArimaModel::arma({1.05}, {});
  CHECK_THROWS_AS(simulate(bad, 100, 1), InvalidModelError);
}

TEST_CASE("AR(1) forecasts decay geometrically from the last value") {
  ArimaModel ar = ArimaModel::arma({0.6}, {});
  TimeSeries x = simulate(ar, 300, 5);
  ArimaModel m = ar;
  m.fitted_series = x;
  const double last = x[x.size() - 1];
  std::vector<Forecast> f = forecast(m, 5);
  for (int h = 1; h <= 5; ++h) {
    CHECK(f[h - 1].mean == doctest::Approx(std::pow(0.6, h) * last).epsilon(1e-10));
  }
  // Variance ladder: sigma2 * sum phi^{2j}.
  double acc = 0.0;
  for (int h = 1; h <= 5; ++h) {
    acc += std::pow(0.6, 2 * (h - 1));
    CHECK(f[h - 1].variance == doctest::Approx(acc).epsilon(1e-10));
  }
}

TEST_CASE("white-noise forecasts are flat at the mean with variance sigma2") {
  ArimaModel wn = ArimaModel::arma({}, {}, 2.5, 7.0);
  TimeSeries x = simulate(wn, 200, 9);
  ArimaModel m = wn;
  m.fitted_series = x;
  std::vector<Forecast> f = forecast(m, 10);
  for (const Forecast& step : f) {
    CHECK(step.mean == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(step.variance == doctest::Approx(2.5).epsilon(1e-12));
  }
}

TEST_CASE("long-horizon forecasts converge to the model mean and variance to gamma0") {
  ArimaModel m = ArimaModel::arma({0.7}, {0.2}, 1.3, 4.0);
  TimeSeries x = simulate(m, 400, 17);
  m.fitted_series = x;
  std::vector<Forecast> f = forecast(m, 500);
  CHECK(std::abs(f.back().mean - 4.0) < 1e-6);
  ExpandedArma full = m.expanded();
  std::vector<double> g = arma_acvf(full.phi, full.theta, 0);
  CHECK(f.back().variance == doctest::Approx(m.sigma2 * g[0]).epsilon(1e-8));
}

TEST_CASE("forecast preconditions") {
  ArimaModel m = ArimaModel::arma({0.5}, {});
  CHECK_THROWS_AS(forecast(m, 3), InvalidArgumentError);  // no fitted series
  m.fitted_series = simulate(m, 100, 2);
  CHECK_THROWS_AS(forecast(m, 0), InvalidArgumentError);
}

TEST_CASE("one-step predictions track an integrated series") {
  ArimaModel rw = ArimaModel::arma({}, {});
  rw.order = ArimaOrder(0, 1, 0);
  TimeSeries x = simulate(rw, 200, 44);
  // Random walk: the one-step prediction of x[t] is x[t-1].
  std::vector<double> pred = one_step_predictions(rw, x.span(), 100);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    CHECK(pred[i] == doctest::Approx(x[99 + i]).epsilon(1e-12));
  }
}
