#include "tsbreak/time_series.hpp"

#include <cmath>

namespace tsbreak {

TimeSeries::TimeSeries(std::vector<double> values, Date start_date, int frequency)
    : values_(std::move(values)), start_(start_date), frequency_(frequency) {
  if (values_.empty()) {
    throw InvalidArgumentError("time series must be non-empty");
  }
  if (frequency_ < 1) {
    throw InvalidArgumentError("frequency must be >= 1");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidArgumentError("non-finite value at index " + std::to_string(i));
    }
  }
}

TimeSeries TimeSeries::slice(std::size_t first, std::size_t last) const {
  if (first >= last || last > values_.size()) {
    throw InvalidArgumentError("bad slice range [" + std::to_string(first) + ", " +
                               std::to_string(last) + ")");
  }
  return TimeSeries(std::vector<double>(values_.begin() + first, values_.begin() + last),
                    date_at(first), frequency_);
}

std::size_t TimeSeries::index_of(Date d) const {
  std::int64_t offset = d - start_;
  if (offset < 0 || offset >= static_cast<std::int64_t>(values_.size())) {
    throw InvalidArgumentError("date " + d.to_iso() + " outside series span");
  }
  return static_cast<std::size_t>(offset);
}

}  // namespace tsbreak
