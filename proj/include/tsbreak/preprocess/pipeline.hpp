#pragma once

#include "tsbreak/arima/fit.hpp"
#include "tsbreak/preprocess/daily.hpp"

namespace tsbreak::preprocess {

struct WeekdayDetrend {
  TimeSeries residual;
  double intercept = 0.0;       // weekday level
  double weekend_coef = 0.0;    // weekend level minus weekday level
};

/// Ordinary least squares of the series on (1, I(Saturday or Sunday)).
/// Needs at least two full weeks; residual = value - fit.
WeekdayDetrend detrend_weekday(const TimeSeries& series);

struct SeasonalSpec {
  int P = 0, D = 1, Q = 1;  // default (0,1,1) at period 7
  int period = 7;
  /// When set, search P,Q in {0,1} and D in {0,1} by AICc instead of using
  /// the fixed spec above.
  bool select_by_aicc = false;
};

struct Deseasonalized {
  TimeSeries residual;
  arima::ArimaModel model;
};

/// Fits a purely seasonal SARIMA (non-seasonal orders fixed at zero) and
/// returns its residuals — the analysis-ready series.
Deseasonalized deseasonalize(const TimeSeries& series, const SeasonalSpec& spec = {},
                             const arima::FitConfig& fit_config = {});

struct PreprocessConfig {
  DailyConfig daily;
  SeasonalSpec seasonal;
  arima::FitConfig fit;
};

/// End-to-end preparation chain with every intermediate stage retained for
/// plotting: daily aggregation, weekday/weekend detrend, period-7
/// deseasonalization.
struct PreprocessReport {
  StationDaily daily;
  TimeSeries detrended;
  double weekday_intercept = 0.0;
  double weekend_coefficient = 0.0;
  arima::ArimaModel seasonal_model;
  TimeSeries residual;
};

PreprocessReport pipeline(const std::vector<TurnstileRecord>& records, const std::string& station,
                          Date from, Date to, const PreprocessConfig& config = {});

/// Detrend + deseasonalize for an already-aggregated daily series.
PreprocessReport pipeline_from_daily(StationDaily daily, const PreprocessConfig& config = {});

}  // namespace tsbreak::preprocess
