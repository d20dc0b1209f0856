#include "tsbreak/calendar.hpp"

#include <cstdio>

#include "tsbreak/errors.hpp"

namespace tsbreak {

namespace {

// Days-from-civil / civil-from-days conversions for the proleptic Gregorian
// calendar (Howard Hinnant's chrono algorithms).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

bool valid_ymd(int y, int m, int d) {
  if (m < 1 || m > 12 || d < 1) return false;
  static const int month_len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int len = month_len[m - 1];
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) len = 29;
  return d <= len;
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
  if (!valid_ymd(year, month, day)) {
    throw InvalidArgumentError("invalid calendar date " + std::to_string(year) + "-" +
                               std::to_string(month) + "-" + std::to_string(day));
  }
  return Date(days_from_civil(year, month, day));
}

Date Date::from_iso(const std::string& text) {
  int y = 0, m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3) {
    throw InvalidArgumentError("cannot parse ISO date '" + text + "'");
  }
  return from_ymd(y, m, d);
}

Date Date::from_mdy(const std::string& text) {
  int y = 0, m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d/%d/%d%c", &m, &d, &y, &tail) != 3) {
    throw InvalidArgumentError("cannot parse MM/DD/YYYY date '" + text + "'");
  }
  return from_ymd(y, m, d);
}

void Date::to_ymd(int& year, int& month, int& day) const {
  civil_from_days(days_, year, month, day);
}

std::string Date::to_iso() const {
  int y, m, d;
  to_ymd(y, m, d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
  return buf;
}

}  // namespace tsbreak
