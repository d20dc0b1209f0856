#pragma once

#include <optional>

#include "tsbreak/preprocess/turnstile.hpp"
#include "tsbreak/time_series.hpp"

namespace tsbreak::preprocess {

struct DailyConfig {
  /// A per-reading diff above this is treated as a counter glitch.
  double max_per_interval = 10000.0;
  /// Trailing window (valid diffs) used to impute anomalous diffs.
  int imputation_window = 7;
  /// Longest tolerated run of days with no readings from any device.
  int max_gap_days = 2;
};

struct AnomalyRecord {
  std::string device;  // booth/unit/scp
  Date date;
  double raw_diff = 0.0;
  double imputed_value = 0.0;
  std::string reason;
};

/// Daily entry counts for one station plus the log of every repair that was
/// applied to get there.
struct StationDaily {
  std::string station;
  TimeSeries series;
  std::vector<AnomalyRecord> anomaly_log;
};

/// Differences each device's cumulative counter between consecutive
/// readings, repairs resets (negative diffs) and glitches (diffs above
/// max_per_interval) with the device's trailing rolling average, and sums
/// per day across devices. Days with no readings anywhere are imputed from
/// the station's trailing 7-day mean; a run of them longer than
/// max_gap_days raises a continuity error.
StationDaily daily_entries(const std::vector<TurnstileRecord>& records,
                           const std::string& station, Date from, Date to,
                           const DailyConfig& config = {});

/// Station names present in a record batch, sorted, for error messages.
std::vector<std::string> station_names(const std::vector<TurnstileRecord>& records);

}  // namespace tsbreak::preprocess
