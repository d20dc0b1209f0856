#pragma once

#include <string>
#include <vector>

#include "tsbreak/stats.hpp"
#include "tsbreak/time_series.hpp"

namespace tsbreak::report {

struct LineSeries {
  std::string name;
  std::vector<double> y;  // x is implicit 0..n-1 (calendar offset)
  std::string color = "#1f77b4";
};

/// Self-contained SVG line chart. Vertical marker positions are x indices.
void write_line_chart_svg(const std::string& path, const std::string& title,
                          const std::vector<LineSeries>& series, Date start_date,
                          const std::vector<std::size_t>& markers = {});

struct Histogram {
  std::vector<double> bin_edges;  // size bins+1
  std::vector<std::size_t> counts;
};

/// Freedman-Diaconis binning with a floor of 10 bins.
Histogram histogram(std::span<const double> values, int min_bins = 10);

void write_histogram_svg(const std::string& path, const std::string& title, const Histogram& h);

/// Bar chart of a correlation sequence with +-1.96/sqrt(n) reference bands.
void write_correlation_svg(const std::string& path, const std::string& title,
                           const CorrelationSequence& seq);

/// Small-multiple ACF panels, one per window of the series.
struct AcfWindow {
  std::string label;
  CorrelationSequence acf;
};
void write_acf_panels_svg(const std::string& path, const std::string& title,
                          const std::vector<AcfWindow>& panels);

/// CSV companions so every figure is testable from its data file.
void write_histogram_csv(const std::string& path, const Histogram& h);
void write_correlation_csv(const std::string& path, const CorrelationSequence& seq);
void write_acf_windows_csv(const std::string& path, const std::vector<AcfWindow>& panels);

}  // namespace tsbreak::report
