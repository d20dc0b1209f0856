#include "tsbreak/preprocess/daily.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tsbreak/errors.hpp"
#include "tsbreak/stats.hpp"

namespace tsbreak::preprocess {

namespace {

struct Reading {
  Date date;
  int seconds;
  std::uint64_t entries;
  bool operator<(const Reading& o) const {
    if (date != o.date) return date < o.date;
    return seconds < o.seconds;
  }
};

double trailing_mean(const std::vector<double>& values, int window) {
  if (values.empty()) return 0.0;
  const std::size_t take = std::min<std::size_t>(values.size(), window);
  double s = 0.0;
  for (std::size_t i = values.size() - take; i < values.size(); ++i) s += values[i];
  return s / static_cast<double>(take);
}

}  // namespace

std::vector<std::string> station_names(const std::vector<TurnstileRecord>& records) {
  std::set<std::string> names;
  for (const TurnstileRecord& r : records) names.insert(r.station);
  return {names.begin(), names.end()};
}

StationDaily daily_entries(const std::vector<TurnstileRecord>& records, const std::string& station,
                           Date from, Date to, const DailyConfig& config) {
  if (to < from) throw InvalidArgumentError("daily_entries: 'to' precedes 'from'");

  // Readings per device, ordered in time.
  std::map<std::string, std::vector<Reading>> devices;
  for (const TurnstileRecord& r : records) {
    if (r.station != station) continue;
    devices[r.booth + "/" + r.unit + "/" + r.scp].push_back(
        {r.date, r.seconds_of_day, r.entries});
  }
  if (devices.empty()) {
    std::string msg = "station '" + station + "' has no records; available stations:";
    for (const std::string& s : station_names(records)) msg += " '" + s + "'";
    throw InvalidArgumentError(msg);
  }

  const std::size_t n_days = static_cast<std::size_t>(to - from) + 1;
  std::vector<double> totals(n_days, 0.0);
  std::vector<int> contributions(n_days, 0);
  std::vector<AnomalyRecord> log;

  for (auto& [device, readings] : devices) {
    std::sort(readings.begin(), readings.end());
    std::vector<double> valid_diffs;
    for (std::size_t i = 1; i < readings.size(); ++i) {
      const double raw = static_cast<double>(readings[i].entries) -
                         static_cast<double>(readings[i - 1].entries);
      double value = raw;
      const bool negative = raw < 0.0;
      const bool too_big = raw > config.max_per_interval;
      if (negative || too_big) {
        value = trailing_mean(valid_diffs, config.imputation_window);
        log.push_back({device, readings[i].date, raw, value,
                       negative ? "negative diff" : "diff above max_per_interval"});
      } else {
        valid_diffs.push_back(raw);
      }
      const std::int64_t offset = readings[i].date - from;
      if (offset >= 0 && offset < static_cast<std::int64_t>(n_days)) {
        totals[offset] += value;
        ++contributions[offset];
      }
    }
  }

  // Close calendar gaps; long ones are a data defect, not something to paper
  // over (the study stations were picked to have none).
  std::vector<double> series;
  series.reserve(n_days);
  int gap_run = 0;
  for (std::size_t i = 0; i < n_days; ++i) {
    if (contributions[i] > 0) {
      gap_run = 0;
      series.push_back(totals[i]);
      continue;
    }
    ++gap_run;
    if (gap_run > config.max_gap_days) {
      const Date gap_start = from + static_cast<std::int64_t>(i) - gap_run + 1;
      throw DataQualityError("no readings for any device of '" + station + "' for " +
                             std::to_string(gap_run) + " days starting " + gap_start.to_iso());
    }
    const double imputed = trailing_mean(series, 7);
    log.push_back({"(station)", from + static_cast<std::int64_t>(i), 0.0, imputed, "calendar gap"});
    series.push_back(imputed);
  }

  return StationDaily{station, TimeSeries(std::move(series), from), std::move(log)};
}

}  // namespace tsbreak::preprocess
