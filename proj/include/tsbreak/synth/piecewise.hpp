#pragma once

#include <cstdint>
#include <vector>

#include "tsbreak/arima/simulate.hpp"

namespace tsbreak::synth {

/// Independent stationary models concatenated at known boundaries.
struct PiecewiseSegment {
  std::size_t length = 0;
  arima::ArimaModel model;
};

struct PiecewiseSpec {
  std::vector<PiecewiseSegment> segments;
  std::uint64_t seed = 0;
  Date start_date = Date::from_ymd(2019, 1, 1);
};

struct PiecewiseSeries {
  TimeSeries series;
  /// 0-based index of the first observation of each new regime.
  std::vector<std::size_t> true_breaks;
};

/// Each segment restarts the recursion from scratch (its own burn-in) while
/// drawing from one shared seeded generator, so a single-segment spec is
/// bit-identical to arima::simulate with the same seed.
PiecewiseSeries gen_piecewise(const PiecewiseSpec& spec);

/// Exhaustive single-split search: at every admissible split both sides get
/// an AR(p_lag)+intercept least-squares fit; returns the split minimizing
/// total SSE and the relative SSE gain over the unsplit fit.
struct OracleBreak {
  std::size_t best_break = 0;
  double sse_gain = 0.0;  // (SSE_unsplit - SSE_split) / SSE_unsplit
  double split_sse = 0.0;
  double unsplit_sse = 0.0;
};
OracleBreak oracle_single_break(const TimeSeries& series, int p_lag, int min_gap);

}  // namespace tsbreak::synth
