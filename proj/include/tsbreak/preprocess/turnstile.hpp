#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tsbreak/calendar.hpp"

namespace tsbreak::preprocess {

/// One raw cumulative-counter reading from one turnstile device.
struct TurnstileRecord {
  std::string booth;    // C/A
  std::string unit;     // remote unit
  std::string scp;      // subunit channel position (device address)
  std::string station;
  Date date;
  int seconds_of_day = 0;
  std::uint64_t entries = 0;  // cumulative counter
  std::uint64_t exits = 0;    // cumulative counter
};

struct RejectedRow {
  std::size_t row_number = 0;  // 1-based, header is row 1
  std::string reason;
  std::string raw;
};

struct ParseResult {
  std::vector<TurnstileRecord> records;
  std::vector<RejectedRow> rejects;
};

/// Parses the public turnstile CSV feed. Header must match
/// `C/A,UNIT,SCP,STATION,LINENAME,DIVISION,DATE,TIME,DESC,ENTRIES,EXITS`
/// exactly; malformed rows go to the rejects report instead of being
/// dropped. Throws FormatError on a missing header and DataQualityError
/// when more than 5% of data rows reject.
ParseResult parse_turnstile(std::istream& in);
ParseResult parse_turnstile_file(const std::string& path);

}  // namespace tsbreak::preprocess
