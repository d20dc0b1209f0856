#include <doctest.h>

#include <random>
#include <sstream>

#include "tsbreak/arima/simulate.hpp"
#include "tsbreak/differencing.hpp"
#include "tsbreak/series_csv.hpp"
#include "tsbreak/stats.hpp"

using namespace tsbreak;

namespace {

TimeSeries make_series(std::vector<double> v) { return TimeSeries(std::move(v), Date::from_ymd(2019, 1, 1)); }

TimeSeries simulate_ar1(double phi, std::size_t n, std::uint64_t seed) {
  arima::ArimaModel model = arima::ArimaModel::arma({phi}, {});
  return arima::simulate(model, n, seed);
}

}  // namespace

TEST_CASE("calendar date round trips and weekday") {
  Date d = Date::from_ymd(2020, 3, 13);
  CHECK(d.to_iso() == "2020-03-13");
  CHECK(d.weekday() == 5);  // a Friday
  CHECK_FALSE(d.is_weekend());
  CHECK((d + 1).is_weekend());   // Saturday
  CHECK((d + 2).is_weekend());   // Sunday
  CHECK_FALSE((d + 3).is_weekend());

  CHECK(Date::from_iso("2019-12-31") + 1 == Date::from_ymd(2020, 1, 1));
  CHECK(Date::from_mdy("03/13/2020") == d);
  CHECK(Date::from_ymd(2020, 2, 29).to_iso() == "2020-02-29");  // leap year
  CHECK_THROWS_AS(Date::from_ymd(2019, 2, 29), InvalidArgumentError);
  CHECK_THROWS_AS(Date::from_iso("2019-13-01"), InvalidArgumentError);
  CHECK(Date::from_ymd(2020, 6, 30) - Date::from_ymd(2019, 1, 1) == 546);
}

TEST_CASE("time series validation") {
  CHECK_THROWS_AS(make_series({}), InvalidArgumentError);
  CHECK_THROWS_AS(make_series({1.0, std::nan("")}), InvalidArgumentError);
  TimeSeries s = make_series({1, 2, 3});
  CHECK(s.date_at(2) == Date::from_ymd(2019, 1, 3));
  CHECK(s.index_of(Date::from_ymd(2019, 1, 2)) == 1);
  CHECK_THROWS_AS(s.index_of(Date::from_ymd(2019, 1, 4)), InvalidArgumentError);
}

TEST_CASE("acvf on a constant series is all zero") {
  CorrelationSequence g = acvf(make_series({5, 5, 5, 5}), 2);
  REQUIRE(g.values.size() == 3);
  for (double v : g.values) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("acvf lag zero is the biased sample variance") {
  TimeSeries s = simulate_ar1(0.4, 300, 7);
  CorrelationSequence g = acvf(s, 5);
  CHECK(g.values[0] == doctest::Approx(sample_variance(s.span())).epsilon(1e-12));
}

TEST_CASE("acvf by hand for [1,2,3,4]") {
  CorrelationSequence g = acvf(make_series({1, 2, 3, 4}), 1);
  CHECK(g.values[0] == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(g.values[1] == doctest::Approx(0.3125).epsilon(1e-14));
}

TEST_CASE("acvf preconditions") {
  CHECK_THROWS_AS(acvf(make_series({1, 2, 3}), 3), InvalidArgumentError);
  CHECK_THROWS_AS(acvf(make_series({1}), 0), InsufficientDataError);
}

TEST_CASE("acf normalizes to one at lag zero and rejects zero variance") {
  CorrelationSequence r = acf(make_series({1, 5, 2, 8, 3}), 2);
  CHECK(r.values[0] == 1.0);
  for (double v : r.values) CHECK(std::abs(v) <= 1.0 + 1e-12);
  CHECK_THROWS_AS(acf(make_series({2, 2, 2, 2}), 1), DegenerateSeriesError);
}

TEST_CASE("acf of simulated AR(1) matches theory at lag one") {
  TimeSeries s = simulate_ar1(0.5, 10000, 11);
  CorrelationSequence r = acf(s, 3);
  CHECK(r.values[1] > 0.47);
  CHECK(r.values[1] < 0.53);
}

TEST_CASE("acf of white noise stays inside the confidence band") {
  // Aggregate over 200 seeds: at least 90% of lags 1..20 within 1.96/sqrt(n).
  const std::size_t n = 1000;
  const double band = 1.96 / std::sqrt(static_cast<double>(n));
  arima::ArimaModel wn = arima::ArimaModel::arma({}, {});
  std::size_t inside = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TimeSeries s = arima::simulate(wn, n, seed);
    CorrelationSequence r = acf(s, 20);
    for (int h = 1; h <= 20; ++h) {
      ++total;
      if (std::abs(r.values[h]) < band) ++inside;
    }
  }
  CHECK(static_cast<double>(inside) / static_cast<double>(total) >= 0.90);
}

TEST_CASE("acf estimator is symmetric under series reversal") {
  TimeSeries s = simulate_ar1(0.6, 500, 3);
  std::vector<double> rev(s.values().rbegin(), s.values().rend());
  CorrelationSequence a = acf(s, 20);
  CorrelationSequence b = acf(make_series(rev), 20);
  for (int h = 0; h <= 20; ++h) {
    CHECK(std::abs(a.values[h] - b.values[h]) <= 1e-12);
  }
}

TEST_CASE("acvf dominates every lag (Cauchy-Schwarz)") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TimeSeries s = simulate_ar1(0.7, 200, 100 + seed);
    CorrelationSequence g = acvf(s, 30);
    for (std::size_t h = 1; h < g.values.size(); ++h) {
      CHECK(g.values[0] >= std::abs(g.values[h]) - 1e-12);
    }
  }
}

TEST_CASE("pacf lag one equals acf lag one exactly") {
  TimeSeries s = simulate_ar1(0.5, 400, 21);
  CorrelationSequence a = acf(s, 5);
  CorrelationSequence p = pacf(s, 5);
  CHECK(p.lags.front() == 1);
  CHECK(p.values.front() == a.values[1]);
}

TEST_CASE("pacf of AR(1) cuts off after lag one") {
  TimeSeries s = simulate_ar1(0.5, 10000, 5);
  CorrelationSequence p = pacf(s, 10);
  for (int h = 2; h <= 10; ++h) {
    CHECK(std::abs(p.at_lag(h)) < 0.05);
  }
}

TEST_CASE("pacf of AR(2) recovers phi2 at lag two") {
  arima::ArimaModel model = arima::ArimaModel::arma({0.5, 0.3}, {});
  TimeSeries s = arima::simulate(model, 10000, 13);
  CorrelationSequence p = pacf(s, 4);
  CHECK(p.at_lag(2) > 0.25);
  CHECK(p.at_lag(2) < 0.35);
}

TEST_CASE("difference removes a linear trend") {
  DifferencedSeries d = difference(make_series({1, 2, 3, 4, 5}), 1, 0, 1);
  CHECK(d.series.values() == std::vector<double>{1, 1, 1, 1});
  CHECK(d.series.start_date() == Date::from_ymd(2019, 1, 2));
}

TEST_CASE("difference with d=0, D=0 is the identity") {
  TimeSeries s = make_series({3, 1, 4, 1, 5});
  DifferencedSeries d = difference(s, 0, 0, 7);
  CHECK(d.series.values() == s.values());
}

TEST_CASE("seasonal difference at period 7") {
  DifferencedSeries d = difference(make_series({1, 2, 3, 4, 5, 6, 7, 8, 9}), 0, 1, 7);
  CHECK(d.series.values() == std::vector<double>{7, 7});
}

TEST_CASE("difference length precondition") {
  CHECK_THROWS_AS(difference(make_series({1, 2, 3}), 2, 1, 7), InsufficientDataError);
}

TEST_CASE("integrate inverts difference for all admissible orders") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> value(-1e4, 1e5);
  for (int d = 0; d <= 2; ++d) {
    for (int D = 0; D <= 1; ++D) {
      for (int period : {1, 7}) {
        if (D > 0 && period < 2) continue;
        std::vector<double> v(40);
        for (double& x : v) x = value(gen);
        TimeSeries s = make_series(v);
        DifferencedSeries diffed = difference(s, d, D, period);
        TimeSeries back = integrate(diffed);
        REQUIRE(back.size() == s.size());
        CHECK(back.start_date() == s.start_date());
        for (std::size_t i = 0; i < s.size(); ++i) {
          CHECK(std::abs(back[i] - s[i]) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("rolling mean trivia") {
  TimeSeries c = make_series({4, 4, 4, 4, 4});
  CHECK(rolling_mean(c, 3).values() == c.values());
  TimeSeries s = make_series({2, 4, 6});
  CHECK(rolling_mean(s, 1).values() == s.values());
  CHECK(rolling_mean(s, 2).values() == std::vector<double>{2, 3, 5});
  CHECK_THROWS_AS(rolling_mean(s, 4), InvalidArgumentError);
  CHECK_THROWS_AS(rolling_mean(s, 0), InvalidArgumentError);
}

TEST_CASE("series csv round trip and validation") {
  TimeSeries s = simulate_ar1(0.3, 25, 40);
  std::stringstream buf;
  write_series_csv(buf, s);
  TimeSeries back = read_series_csv(buf);
  CHECK(back.start_date() == s.start_date());
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(back[i] == s[i]);

  std::stringstream bad1("value,date\n2019-01-01,1\n");
  CHECK_THROWS_AS(read_series_csv(bad1), FormatError);
  std::stringstream bad2("date,value\n2019-01-01,1\n2019-01-03,2\n");
  CHECK_THROWS_AS(read_series_csv(bad2), FormatError);
  std::stringstream bad3("date,value\n2019-01-01,abc\n");
  CHECK_THROWS_AS(read_series_csv(bad3), FormatError);
}
