#include <doctest.h>

#include <cmath>

#include "tsbreak/arima/auto_fit.hpp"
#include "tsbreak/arima/simulate.hpp"

using namespace tsbreak;
using namespace tsbreak::arima;

namespace {

ArimaOrder small_bounds(int pq = 3) {
  ArimaOrder bounds;
  bounds.p = pq;
  bounds.q = pq;
  bounds.d = 2;
  return bounds;
}

// Monte-Carlo runs use one optimizer start per order; a 48-model grid times
// 100 seeds with full restarts would be minutes for no statistical gain.
FitConfig light_config() {
  FitConfig c;
  c.optimizer_restarts = 0;
  c.convergence_tol = 1e-8;
  return c;
}

}  // namespace

TEST_CASE("auto_fit picks the null model on white noise in most seeds") {
  ArimaModel wn = ArimaModel::arma({}, {}, 1.0, 0.0);
  int null_selected = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TimeSeries x = simulate(wn, 1000, 5000 + seed);
    ArimaModel m = auto_fit(x, small_bounds(), light_config());
    if (m.order.p == 0 && m.order.d == 0 && m.order.q == 0) ++null_selected;
  }
  CHECK(null_selected >= 80);
}

TEST_CASE("auto_fit lands within two AICc units of the true-order fit") {
  const ArimaModel truth = ArimaModel::arma({0.6}, {0.3});
  ArimaOrder true_order(1, 0, 1);
  true_order.include_mean = true;
  int close = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TimeSeries x = simulate(truth, 2000, 7000 + seed);
    ArimaModel selected = auto_fit(x, small_bounds(2), light_config());
    ArimaModel at_truth = fit(x, true_order, light_config());
    if (selected.criteria.aicc <= at_truth.criteria.aicc + 2.0) ++close;
  }
  CHECK(close >= 90);
}

TEST_CASE("auto_fit result always passes the root checks") {
  const ArimaModel truth = ArimaModel::arma({0.5}, {-0.4});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    TimeSeries x = simulate(truth, 400, 100 + seed);
    ArimaModel m = auto_fit(x, small_bounds(), light_config());
    RootReport r = m.root_report();
    CHECK(r.causal);
    CHECK(r.invertible);
  }
}
