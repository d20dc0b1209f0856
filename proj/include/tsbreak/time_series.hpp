#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tsbreak/calendar.hpp"
#include "tsbreak/errors.hpp"

namespace tsbreak {

/// Equally spaced daily observations with a gap-free calendar index.
/// Values are validated once at construction: non-empty and all finite.
class TimeSeries {
 public:
  TimeSeries(std::vector<double> values, Date start_date, int frequency = 1);

  const std::vector<double>& values() const { return values_; }
  std::span<const double> span() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  Date start_date() const { return start_; }
  Date date_at(std::size_t i) const { return start_ + static_cast<std::int64_t>(i); }
  Date end_date() const { return date_at(values_.size() - 1); }
  int frequency() const { return frequency_; }

  /// Copy of the half-open index range [first, last).
  TimeSeries slice(std::size_t first, std::size_t last) const;

  /// Index of a calendar date, or throws if outside the span.
  std::size_t index_of(Date d) const;

 private:
  std::vector<double> values_;
  Date start_;
  int frequency_;
};

}  // namespace tsbreak
