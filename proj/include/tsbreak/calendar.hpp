#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsbreak {

/// Calendar date stored as a count of days since 1970-01-01 (proleptic
/// Gregorian). Cheap to copy and to advance by whole days, which is all the
/// daily ridership series need.
class Date {
 public:
  Date() : days_(0) {}
  explicit Date(std::int64_t days_since_epoch) : days_(days_since_epoch) {}

  static Date from_ymd(int year, int month, int day);
  static Date from_iso(const std::string& text);    // "YYYY-MM-DD"
  static Date from_mdy(const std::string& text);    // "MM/DD/YYYY"

  void to_ymd(int& year, int& month, int& day) const;
  std::string to_iso() const;

  std::int64_t days_since_epoch() const { return days_; }

  /// 0 = Sunday ... 6 = Saturday.
  int weekday() const {
    std::int64_t w = (days_ + 4) % 7;
    return static_cast<int>(w < 0 ? w + 7 : w);
  }
  bool is_weekend() const {
    int w = weekday();
    return w == 0 || w == 6;
  }

  Date operator+(std::int64_t days) const { return Date(days_ + days); }
  Date operator-(std::int64_t days) const { return Date(days_ - days); }
  std::int64_t operator-(const Date& other) const { return days_ - other.days_; }
  Date& operator++() { ++days_; return *this; }

  auto operator<=>(const Date&) const = default;

 private:
  std::int64_t days_;
};

}  // namespace tsbreak
