#include "tsbreak/preprocess/pipeline.hpp"

#include <limits>

#include "tsbreak/stats.hpp"

namespace tsbreak::preprocess {

WeekdayDetrend detrend_weekday(const TimeSeries& series) {
  const std::size_t n = series.size();
  if (n < 14) {
    throw InsufficientDataError("weekday detrend needs at least two full weeks");
  }
  // Two-level OLS has a closed form: intercept = weekday mean, coefficient =
  // weekend mean - weekday mean.
  double sum_wd = 0.0, sum_we = 0.0;
  std::size_t n_wd = 0, n_we = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (series.date_at(i).is_weekend()) {
      sum_we += series[i];
      ++n_we;
    } else {
      sum_wd += series[i];
      ++n_wd;
    }
  }
  if (n_wd == 0 || n_we == 0) {
    throw NumericalError("weekday dummy is rank deficient (span lacks weekdays or weekends)");
  }
  WeekdayDetrend out{series, sum_wd / n_wd, sum_we / n_we - sum_wd / n_wd};
  std::vector<double> resid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = out.intercept + (series.date_at(i).is_weekend() ? out.weekend_coef : 0.0);
    resid[i] = series[i] - fit;
  }
  out.residual = TimeSeries(std::move(resid), series.start_date());
  return out;
}

Deseasonalized deseasonalize(const TimeSeries& series, const SeasonalSpec& spec,
                             const arima::FitConfig& fit_config) {
  if (series.size() < 4 * static_cast<std::size_t>(spec.period)) {
    throw InsufficientDataError("deseasonalize needs at least 4 seasonal periods");
  }

  auto fit_spec = [&](int P, int D, int Q) {
    arima::ArimaOrder order(0, 0, 0, P, D, Q, spec.period);
    return arima::fit(series, order, fit_config);
  };

  arima::ArimaModel model = fit_spec(spec.P, spec.D, spec.Q);
  if (spec.select_by_aicc) {
    double best = model.criteria.aicc;
    for (int P = 0; P <= 1; ++P) {
      for (int D = 0; D <= 1; ++D) {
        for (int Q = 0; Q <= 1; ++Q) {
          if (P == spec.P && D == spec.D && Q == spec.Q) continue;
          try {
            arima::ArimaModel m = fit_spec(P, D, Q);
            if (m.criteria.aicc < best) {
              best = m.criteria.aicc;
              model = std::move(m);
            }
          } catch (const Error&) {
            // candidate spec unfittable on this span; keep searching
          }
        }
      }
    }
  }

  TimeSeries residual = *model.residuals;
  return {std::move(residual), std::move(model)};
}

PreprocessReport pipeline_from_daily(StationDaily daily, const PreprocessConfig& config) {
  WeekdayDetrend detrend = detrend_weekday(daily.series);
  Deseasonalized seasonal = deseasonalize(detrend.residual, config.seasonal, config.fit);
  return PreprocessReport{std::move(daily),
                          std::move(detrend.residual),
                          detrend.intercept,
                          detrend.weekend_coef,
                          std::move(seasonal.model),
                          std::move(seasonal.residual)};
}

PreprocessReport pipeline(const std::vector<TurnstileRecord>& records, const std::string& station,
                          Date from, Date to, const PreprocessConfig& config) {
  StationDaily daily = daily_entries(records, station, from, to, config.daily);
  return pipeline_from_daily(std::move(daily), config);
}

}  // namespace tsbreak::preprocess
