#pragma once

#include <iosfwd>
#include <string>

#include "tsbreak/time_series.hpp"

namespace tsbreak {

/// Two-column CSV `date,value` with ISO-8601 dates, header required,
/// one row per consecutive day.
TimeSeries read_series_csv(std::istream& in);
TimeSeries read_series_csv_file(const std::string& path);

void write_series_csv(std::ostream& out, const TimeSeries& series);
void write_series_csv_file(const std::string& path, const TimeSeries& series);

}  // namespace tsbreak
