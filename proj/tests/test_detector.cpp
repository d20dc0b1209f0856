#include <doctest.h>

#include "tsbreak/changepoint/detector.hpp"
#include "tsbreak/synth/piecewise.hpp"

using namespace tsbreak;
using namespace tsbreak::changepoint;

namespace {

TimeSeries make_series(std::vector<double> v) {
  return TimeSeries(std::move(v), Date::from_ymd(2019, 1, 1));
}

arima::ArimaModel ar1(double phi, double mean = 0.0, double sigma2 = 1.0) {
  return arima::ArimaModel::arma({phi}, {}, sigma2, mean);
}

arima::ArimaOrder tiny_bounds() {
  arima::ArimaOrder b;
  b.p = 2;
  b.q = 2;
  b.d = 1;
  return b;
}

arima::FitConfig light_config() {
  arima::FitConfig c;
  c.optimizer_restarts = 0;
  c.convergence_tol = 1e-8;
  return c;
}

}  // namespace

TEST_CASE("detector config validation") {
  DetectorConfig c;
  CHECK_NOTHROW(c.validate());
  c.min_gap = 1;
  CHECK_THROWS_AS(c.validate(), InvalidArgumentError);
  c = DetectorConfig{};
  c.lambda1_grid = {1.0, 2.0};  // not decreasing
  CHECK_THROWS_AS(c.validate(), InvalidArgumentError);
}

TEST_CASE("select_lambda returns the only grid value when there is one") {
  arima::ArimaModel m = ar1(0.5);
  TimeSeries s = arima::simulate(m, 200, 3);
  LaggedDesign d = build_design(s, 1);
  DetectorConfig config;
  config.lambda1_grid = {0.37};
  CHECK(select_lambda(d, config) == 0.37);
}

TEST_CASE("grid order does not change the selected lambda") {
  synth::PiecewiseSpec spec;
  spec.segments.push_back({150, ar1(0.3)});
  spec.segments.push_back({150, ar1(0.3)});
  spec.segments.back().model.mean = 4.0;
  spec.segments.back().model.order.include_mean = true;
  spec.seed = 5;
  TimeSeries s = synth::gen_piecewise(spec).series;
  LaggedDesign d = build_design(s, 1);
  DetectorConfig config;
  config.lambda1_grid = default_lambda_grid(d);
  const double a = select_lambda(d, config);

  // Selection reduces over the whole grid, so feeding the values in any
  // order (select_lambda sorts a copy) gives the same answer.
  std::reverse(config.lambda1_grid.begin(), config.lambda1_grid.end());
  CHECK(select_lambda(d, config) == a);
  std::vector<double> interleaved;
  std::vector<double> grid = default_lambda_grid(d);
  for (std::size_t i = 0; i < grid.size(); i += 2) interleaved.push_back(grid[i]);
  for (std::size_t i = 1; i < grid.size(); i += 2) interleaved.push_back(grid[i]);
  config.lambda1_grid = interleaved;
  CHECK(select_lambda(d, config) == a);
}

TEST_CASE("select_lambda prefers quiet models on stationary data") {
  // Stationary AR(1): the chosen lambda should land in the upper (larger)
  // half of the grid in at least 80 of 100 seeds.
  int upper = 0;
  DetectorConfig config;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TimeSeries s = arima::simulate(ar1(0.5), 400, 11000 + seed);
    LaggedDesign d = build_design(s, 1);
    std::vector<double> grid = default_lambda_grid(d);
    config.lambda1_grid = grid;
    const double chosen = select_lambda(d, config);
    std::size_t rank = 0;
    while (grid[rank] != chosen) ++rank;
    if (rank < grid.size() / 2) ++upper;
  }
  CHECK(upper >= 80);
}

TEST_CASE("select_lambda admits candidates under a strong break") {
  // Mean shift of 5 sigma: the chosen lambda must leave at least one
  // candidate block active in at least 95 of 100 seeds.
  int admitted = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    synth::PiecewiseSpec spec;
    spec.segments.push_back({200, ar1(0.3)});
    spec.segments.push_back({200, ar1(0.3)});
    spec.segments.back().model.mean = 5.0;
    spec.segments.back().model.order.include_mean = true;
    spec.seed = 12000 + seed;
    TimeSeries s = synth::gen_piecewise(spec).series;
    LaggedDesign d = build_design(s, 1);
    DetectorConfig config;
    FusedLassoResult fit = fused_lasso_fit(d, select_lambda(d, config));
    CandidateSet cands = extract_candidates(fit, d, config);
    if (!cands.candidates.empty()) ++admitted;
  }
  CHECK(admitted >= 95);
}

TEST_CASE("extract_candidates trivia") {
  TimeSeries s = arima::simulate(ar1(0.4), 60, 1);
  LaggedDesign d = build_design(s, 1);
  DetectorConfig config;

  FusedLassoResult all_zero;
  all_zero.block_dim = 2;
  all_zero.beta.assign(d.num_time_points() * 2, 0.0);
  all_zero.lambda1 = 1.0;
  CHECK(extract_candidates(all_zero, d, config).candidates.empty());

  // Two raw candidates 3 apart with min_gap=7: the larger survives.
  FusedLassoResult two = all_zero;
  two.beta[30 * 2] = 1.0;
  two.beta[33 * 2] = 2.0;
  CandidateSet got = extract_candidates(two, d, config);
  REQUIRE(got.candidates.size() == 1);
  CHECK(got.candidates[0].index == 33);
  CHECK(got.candidates[0].magnitude == doctest::Approx(2.0));
}

TEST_CASE("screen keeps a strong mean shift and drops spurious candidates") {
  DetectorConfig config;
  config.p_lag = 1;

  int kept = 0, dropped = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    // Strong break: shift of 5 sigma at t=300 in n=600.
    synth::PiecewiseSpec spec;
    spec.segments.push_back({300, ar1(0.3)});
    spec.segments.push_back({300, ar1(0.3)});
    spec.segments.back().model.mean = 5.0;
    spec.segments.back().model.order.include_mean = true;
    spec.seed = 20000 + seed;
    TimeSeries strong = synth::gen_piecewise(spec).series;
    CandidateSet cands;
    cands.candidates.push_back({300, strong.date_at(300), 5.0});
    if (screen(strong, cands, config).size() == 1) ++kept;

    // Spurious candidate in the middle of a pure AR(1).
    TimeSeries pure = arima::simulate(ar1(0.5), 400, 21000 + seed);
    CandidateSet spurious;
    spurious.candidates.push_back({200, pure.date_at(200), 1.0});
    if (screen(pure, spurious, config).empty()) ++dropped;
  }
  CHECK(kept >= 95);
  CHECK(dropped >= 90);
}

TEST_CASE("screen on an empty candidate set is empty") {
  TimeSeries s = arima::simulate(ar1(0.5), 100, 9);
  CHECK(screen(s, CandidateSet{}, DetectorConfig{}).empty());
}

TEST_CASE("screen auto-removes candidates that leave tiny segments") {
  TimeSeries s = arima::simulate(ar1(0.5), 100, 10);
  CandidateSet cands;
  cands.candidates.push_back({2, s.date_at(2), 1.0});
  std::vector<ScreeningRecord> log;
  DetectorConfig config;
  CHECK(screen(s, cands, config, &log).empty());
  REQUIRE(log.size() == 1);
  CHECK(log[0].reason == "segment shorter than p_lag+2");
}

TEST_CASE("raising screening_tau never increases the retained breakpoints") {
  synth::PiecewiseSpec spec;
  spec.segments.push_back({150, ar1(0.3)});
  spec.segments.push_back({150, ar1(0.6)});
  spec.segments.back().model.mean = 2.0;
  spec.segments.back().model.order.include_mean = true;
  spec.segments.push_back({150, ar1(0.2)});
  spec.seed = 77;
  TimeSeries s = synth::gen_piecewise(spec).series;
  DetectorConfig config;
  LaggedDesign d = build_design(s, config.p_lag);
  FusedLassoResult fit = fused_lasso_fit(d, select_lambda(d, config));
  CandidateSet cands = extract_candidates(fit, d, config);

  std::size_t prev = cands.candidates.size() + 1;
  for (double tau : {0.01, 0.05, 0.15, 0.4, 0.8}) {
    config.screening_tau = tau;
    std::size_t kept = screen(s, cands, config).size();
    CHECK(kept <= prev);
    prev = kept;
  }
}

TEST_CASE("null consistency: lambda above lambda_max gives a single segment") {
  TimeSeries s = arima::simulate(ar1(0.5), 200, 50);
  DetectorConfig config;
  LaggedDesign d = build_design(s, config.p_lag);
  config.lambda1_grid = {lambda_max(d) * 1.01};
  BreakpointResult r = detect_breakpoints(s, config);
  CHECK(r.breakpoints.empty());
  SegmentedModel m = detect(s, config, tiny_bounds(), light_config());
  CHECK(m.breakpoints.empty());
  CHECK(m.segments.size() == 1);
}

TEST_CASE("fit_segments with no breakpoints reduces to auto_fit on the whole series") {
  TimeSeries s = arima::simulate(ar1(0.5), 260, 51);
  SegmentedModel m = fit_segments(s, {}, tiny_bounds(), light_config());
  REQUIRE(m.segments.size() == 1);
  arima::ArimaModel whole = arima::auto_fit(s, tiny_bounds(), light_config());
  CHECK(m.segments[0].model.order.p == whole.order.p);
  CHECK(m.segments[0].model.order.d == whole.order.d);
  CHECK(m.segments[0].model.order.q == whole.order.q);
  CHECK(m.segments[0].model.loglik == doctest::Approx(whole.loglik));
}

TEST_CASE("fit_segments recovers the per-regime AR coefficients") {
  // AR(1) 0.3 -> AR(1) 0.8 with a true break; fitted phis land within 0.1
  // in at least 90 of 100 seeds.
  arima::ArimaOrder ar_only;
  ar_only.p = 1;
  ar_only.q = 0;
  ar_only.d = 0;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    synth::PiecewiseSpec spec;
    spec.segments.push_back({300, ar1(0.3)});
    spec.segments.push_back({300, ar1(0.8)});
    spec.seed = 30000 + seed;
    synth::PiecewiseSeries data = synth::gen_piecewise(spec);
    SegmentedModel m = fit_segments(data.series, {data.series.date_at(300)}, ar_only,
                                    light_config());
    REQUIRE(m.segments.size() == 2);
    const arima::ArimaModel& a = m.segments[0].model;
    const arima::ArimaModel& b = m.segments[1].model;
    if (a.order.p == 1 && b.order.p == 1 && std::abs(a.phi[0] - 0.3) <= 0.1 &&
        std::abs(b.phi[0] - 0.8) <= 0.1) {
      ++good;
    }
  }
  CHECK(good >= 90);
}

TEST_CASE("fit_segments rejects segments below the fit minimum") {
  TimeSeries s = arima::simulate(ar1(0.5), 60, 52);
  CHECK_THROWS_AS(fit_segments(s, {s.date_at(3)}, tiny_bounds(), light_config()),
                  SegmentationError);
}

TEST_CASE("detect finds a single strong break end to end") {
  synth::PiecewiseSpec spec;
  spec.segments.push_back({300, ar1(0.3)});
  spec.segments.push_back({300, ar1(0.8)});
  spec.segments.back().model.mean = 3.0;
  spec.segments.back().model.order.include_mean = true;
  spec.seed = 424242;
  synth::PiecewiseSeries data = synth::gen_piecewise(spec);
  DetectorConfig config;
  SegmentedModel m = detect(data.series, config, tiny_bounds(), light_config());
  REQUIRE(m.breakpoints.size() == 1);
  const std::int64_t got = m.breakpoints[0] - data.series.start_date();
  CHECK(std::abs(got - 300) <= 10);
  CHECK(m.segments.size() == 2);
  CHECK(m.lambda_selected > 0.0);
  for (const SegmentFit& seg : m.segments) {
    CHECK(seg.whiteness.has_value());
  }
}
