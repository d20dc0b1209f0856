#include <doctest.h>

#include "oracles.hpp"
#include "tsbreak/arima/simulate.hpp"
#include "tsbreak/special_functions.hpp"
#include "tsbreak/whiteness.hpp"

using namespace tsbreak;

TEST_CASE("chi-square tail matches the quadrature oracle") {
  for (double df : {1.0, 5.0, 10.0, 20.0}) {
    for (double x : {0.5, 1.0, 5.0, 20.0, 50.0}) {
      const double got = chi_square_upper_tail(x, df);
      const double want = oracles::chi_square_upper_tail(x, df);
      CHECK(std::abs(got - want) <= 1e-8 * want);
    }
  }
}

TEST_CASE("chi-square tail endpoints") {
  CHECK(chi_square_upper_tail(0.0, 5.0) == 1.0);
  CHECK(chi_square_upper_tail(1e4, 5.0) < 1e-300);
  // df=2 has the closed form exp(-x/2)
  CHECK(chi_square_upper_tail(3.0, 2.0) == doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
}

TEST_CASE("whiteness test rejects bad configurations") {
  arima::ArimaModel wn = arima::ArimaModel::arma({}, {});
  TimeSeries noise = arima::simulate(wn, 100, 1);
  CHECK_THROWS_AS(whiteness_test(noise, 3, 3), InvalidArgumentError);
  CHECK_THROWS_AS(whiteness_test(noise, 99, 0), InsufficientDataError);
}

TEST_CASE("whiteness p-value decreases as the statistic grows") {
  // Same df, increasing Q: compare two series, one white, one strongly
  // autocorrelated; also check the raw chi-square curve directly.
  for (double q = 1.0; q < 60.0; q += 7.0) {
    CHECK(chi_square_upper_tail(q + 1.0, 10.0) < chi_square_upper_tail(q, 10.0));
  }
}

TEST_CASE("Li-McLeod size calibration on iid noise") {
  // 500 seeds, n=500, h=20, k=0: rejection rate at the 5% level must sit in
  // [2%, 9%].
  arima::ArimaModel wn = arima::ArimaModel::arma({}, {});
  int rejections = 0;
  const int seeds = 500;
  for (int seed = 0; seed < seeds; ++seed) {
    TimeSeries s = arima::simulate(wn, 500, 9000 + seed);
    WhitenessReport rep = whiteness_test(s, 20, 0);
    if (rep.p_value < 0.05) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / seeds;
  CHECK(rate >= 0.02);
  CHECK(rate <= 0.09);
}

TEST_CASE("Li-McLeod has power against an AR(1) with phi=0.8") {
  arima::ArimaModel ar = arima::ArimaModel::arma({0.8}, {});
  TimeSeries s = arima::simulate(ar, 500, 4242);
  WhitenessReport rep = whiteness_test(s, 20, 0);
  CHECK(rep.p_value < 0.01);
  CHECK_FALSE(rep.consistent_with_white_noise());
}

TEST_CASE("default whiteness lags") {
  CHECK(default_whiteness_lags(500, 0) == 20);
  CHECK(default_whiteness_lags(60, 0) == 12);
  CHECK(default_whiteness_lags(60, 14) == 15);
  CHECK(default_whiteness_lags(12, 4) == 5);  // floor bumped above k
  CHECK(default_whiteness_lags(6, 4) == 0);   // too short for h=5
}
