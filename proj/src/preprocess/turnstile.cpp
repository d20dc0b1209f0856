#include "tsbreak/preprocess/turnstile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsbreak/errors.hpp"

namespace tsbreak::preprocess {

namespace {

const char* kHeader = "C/A,UNIT,SCP,STATION,LINENAME,DIVISION,DATE,TIME,DESC,ENTRIES,EXITS";

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_counter(const std::string& text, std::uint64_t& out) {
  const std::string t = strip(text);
  if (t.empty()) return false;
  std::uint64_t v = 0;
  for (char c : t) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

bool parse_time(const std::string& text, int& seconds) {
  int h = 0, m = 0, s = 0;
  char tail = 0;
  if (std::sscanf(strip(text).c_str(), "%d:%d:%d%c", &h, &m, &s, &tail) != 3) return false;
  if (h < 0 || h > 23 || m < 0 || m > 59 || s < 0 || s > 59) return false;
  seconds = h * 3600 + m * 60 + s;
  return true;
}

}  // namespace

ParseResult parse_turnstile(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip(line) != kHeader) {
    throw FormatError(std::string("turnstile CSV must start with header '") + kHeader + "'");
  }

  ParseResult result;
  std::size_t row = 1;
  std::size_t data_rows = 0;
  while (std::getline(in, line)) {
    ++row;
    const std::string t = strip(line);
    if (t.empty()) continue;
    ++data_rows;

    std::vector<std::string> fields = split_csv(t);
    if (fields.size() != 11) {
      result.rejects.push_back({row, "expected 11 fields, got " + std::to_string(fields.size()), t});
      continue;
    }
    TurnstileRecord rec;
    rec.booth = strip(fields[0]);
    rec.unit = strip(fields[1]);
    rec.scp = strip(fields[2]);
    rec.station = strip(fields[3]);
    try {
      rec.date = Date::from_mdy(fields[6]);
    } catch (const Error&) {
      result.rejects.push_back({row, "bad DATE '" + fields[6] + "'", t});
      continue;
    }
    if (!parse_time(fields[7], rec.seconds_of_day)) {
      result.rejects.push_back({row, "bad TIME '" + fields[7] + "'", t});
      continue;
    }
    if (!parse_counter(fields[9], rec.entries)) {
      result.rejects.push_back({row, "non-numeric ENTRIES '" + fields[9] + "'", t});
      continue;
    }
    if (!parse_counter(fields[10], rec.exits)) {
      result.rejects.push_back({row, "non-numeric EXITS '" + fields[10] + "'", t});
      continue;
    }
    result.records.push_back(std::move(rec));
  }

  if (data_rows > 0 &&
      static_cast<double>(result.rejects.size()) > 0.05 * static_cast<double>(data_rows)) {
    throw DataQualityError(std::to_string(result.rejects.size()) + " of " +
                           std::to_string(data_rows) + " rows rejected (limit 5%)");
  }
  return result;
}

ParseResult parse_turnstile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open turnstile CSV '" + path + "'");
  return parse_turnstile(in);
}

}  // namespace tsbreak::preprocess
