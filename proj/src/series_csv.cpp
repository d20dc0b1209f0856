#include "tsbreak/series_csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tsbreak {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

TimeSeries read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("empty series CSV");
  }
  if (strip(line) != "date,value") {
    throw FormatError("series CSV must start with header 'date,value', got '" + strip(line) + "'");
  }
  std::vector<double> values;
  bool have_start = false;
  Date start, expected;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    std::string t = strip(line);
    if (t.empty()) continue;
    std::size_t comma = t.find(',');
    if (comma == std::string::npos) {
      throw FormatError("row " + std::to_string(row) + ": missing comma");
    }
    Date d = Date::from_iso(strip(t.substr(0, comma)));
    double v = 0.0;
    try {
      v = std::stod(strip(t.substr(comma + 1)));
    } catch (const std::exception&) {
      throw FormatError("row " + std::to_string(row) + ": bad value '" + t.substr(comma + 1) + "'");
    }
    if (!have_start) {
      start = d;
      expected = d;
      have_start = true;
    } else if (d != expected) {
      throw FormatError("row " + std::to_string(row) + ": expected date " + expected.to_iso() +
                        ", got " + d.to_iso() + " (series must be gap-free daily)");
    }
    values.push_back(v);
    expected = expected + 1;
  }
  if (values.empty()) {
    throw FormatError("series CSV has no data rows");
  }
  return TimeSeries(std::move(values), start);
}

TimeSeries read_series_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open series CSV '" + path + "'");
  return read_series_csv(in);
}

void write_series_csv(std::ostream& out, const TimeSeries& series) {
  out << "date,value\n";
  char buf[40];
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", series[i]);
    out << series.date_at(i).to_iso() << ',' << buf << '\n';
  }
}

void write_series_csv_file(const std::string& path, const TimeSeries& series) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write series CSV '" + path + "'");
  write_series_csv(out, series);
}

}  // namespace tsbreak
