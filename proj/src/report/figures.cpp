#include "tsbreak/report/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "tsbreak/errors.hpp"

namespace tsbreak::report {

namespace {

constexpr double kWidth = 860.0, kHeight = 360.0;
constexpr double kLeft = 60.0, kRight = 20.0, kTop = 36.0, kBottom = 40.0;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::ofstream open_file(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write figure file '" + path + "'");
  return out;
}

struct Scale {
  double lo = 0.0, hi = 1.0, span_px = 1.0, offset_px = 0.0;
  bool flip = false;
  double operator()(double v) const {
    double t = (v - lo) / (hi - lo);
    if (flip) t = 1.0 - t;
    return offset_px + t * span_px;
  }
};

Scale x_scale(double lo, double hi) {
  if (hi <= lo) hi = lo + 1.0;
  return {lo, hi, kWidth - kLeft - kRight, kLeft, false};
}
Scale y_scale(double lo, double hi) {
  if (hi <= lo) {
    hi = lo + 1.0;
    lo -= 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad, kHeight - kTop - kBottom, kTop, true};
}

void svg_header(std::ofstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
}

void svg_axes(std::ofstream& out, const Scale& xs, const Scale& ys, int ticks = 5) {
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;
  out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= ticks; ++i) {
    const double fy = ys.lo + (ys.hi - ys.lo) * i / ticks;
    const double py = ys(fy);
    out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\"" << py
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x0 - 8 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(fy)
        << "</text>\n";
    const double fx = xs.lo + (xs.hi - xs.lo) * i / ticks;
    const double px = xs(fx);
    out << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\"" << y0 + 4
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << y0 + 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(fx)
        << "</text>\n";
  }
}

}  // namespace

void write_line_chart_svg(const std::string& path, const std::string& title,
                          const std::vector<LineSeries>& series, Date start_date,
                          const std::vector<std::size_t>& markers) {
  std::ofstream out = open_file(path);
  std::size_t n = 0;
  double lo = 0.0, hi = 1.0;
  bool first = true;
  for (const LineSeries& s : series) {
    n = std::max(n, s.y.size());
    for (double v : s.y) {
      if (first) {
        lo = hi = v;
        first = false;
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  Scale xs = x_scale(0.0, static_cast<double>(n > 1 ? n - 1 : 1));
  Scale ys = y_scale(lo, hi);

  svg_header(out, title + " (from " + start_date.to_iso() + ")");
  svg_axes(out, xs, ys);
  for (std::size_t m : markers) {
    const double px = xs(static_cast<double>(m));
    out << "<line x1=\"" << px << "\" y1=\"" << kTop << "\" x2=\"" << px << "\" y2=\""
        << kHeight - kBottom << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";
  }
  double legend_y = kTop + 6.0;
  for (const LineSeries& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      out << fmt(xs(static_cast<double>(i))) << ',' << fmt(ys(s.y[i])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kRight - 4 << "\" y=\"" << legend_y
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << s.color
        << "\">" << s.name << "</text>\n";
    legend_y += 14.0;
  }
  out << "</svg>\n";
}

Histogram histogram(std::span<const double> values, int min_bins) {
  if (values.empty()) throw InvalidArgumentError("histogram of empty data");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front(), hi = sorted.back();
  const std::size_t n = sorted.size();
  const double q1 = sorted[n / 4], q3 = sorted[(3 * n) / 4];
  const double iqr = q3 - q1;
  double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
  int bins = min_bins;
  if (width > 0.0 && hi > lo) {
    bins = std::max(min_bins, static_cast<int>(std::ceil((hi - lo) / width)));
  }
  bins = std::min(bins, 200);

  Histogram h;
  h.bin_edges.resize(bins + 1);
  h.counts.assign(bins, 0);
  const double span = hi > lo ? hi - lo : 1.0;
  for (int i = 0; i <= bins; ++i) h.bin_edges[i] = lo + span * i / bins;
  for (double v : sorted) {
    int b = static_cast<int>((v - lo) / span * bins);
    b = std::clamp(b, 0, bins - 1);
    ++h.counts[b];
  }
  return h;
}

void write_histogram_svg(const std::string& path, const std::string& title, const Histogram& h) {
  std::ofstream out = open_file(path);
  const std::size_t bins = h.counts.size();
  std::size_t max_count = 1;
  for (std::size_t c : h.counts) max_count = std::max(max_count, c);
  Scale xs = x_scale(h.bin_edges.front(), h.bin_edges.back());
  Scale ys = y_scale(0.0, static_cast<double>(max_count));
  svg_header(out, title);
  svg_axes(out, xs, ys);
  for (std::size_t i = 0; i < bins; ++i) {
    const double x0 = xs(h.bin_edges[i]);
    const double x1 = xs(h.bin_edges[i + 1]);
    const double y = ys(static_cast<double>(h.counts[i]));
    out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(x1 - x0)
        << "\" height=\"" << fmt(ys(0.0) - y) << "\" fill=\"#1f77b4\" stroke=\"white\"/>\n";
  }
  out << "</svg>\n";
}

void write_correlation_svg(const std::string& path, const std::string& title,
                           const CorrelationSequence& seq) {
  std::ofstream out = open_file(path);
  double lo = -0.2, hi = 1.0;
  for (double v : seq.values) {
    lo = std::min(lo, v - 0.05);
    hi = std::max(hi, v + 0.05);
  }
  Scale xs = x_scale(seq.lags.front() - 0.5, seq.lags.back() + 0.5);
  Scale ys = y_scale(lo, hi);
  svg_header(out, title);
  svg_axes(out, xs, ys);
  const double band = 1.96 / std::sqrt(static_cast<double>(seq.n));
  for (double b : {band, -band}) {
    out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(ys(b)) << "\" x2=\"" << kWidth - kRight
        << "\" y2=\"" << fmt(ys(b)) << "\" stroke=\"#2ca02c\" stroke-dasharray=\"5 4\"/>\n";
  }
  out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(ys(0.0)) << "\" x2=\"" << kWidth - kRight
      << "\" y2=\"" << fmt(ys(0.0)) << "\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    const double px = xs(static_cast<double>(seq.lags[i]));
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(ys(0.0)) << "\" x2=\"" << fmt(px)
        << "\" y2=\"" << fmt(ys(seq.values[i])) << "\" stroke=\"#1f77b4\" stroke-width=\"3\"/>\n";
  }
  out << "</svg>\n";
}

void write_acf_panels_svg(const std::string& path, const std::string& title,
                          const std::vector<AcfWindow>& panels) {
  std::ofstream out = open_file(path);
  if (panels.empty()) throw InvalidArgumentError("no panels to draw");
  const double panel_w = 240.0, panel_h = 180.0, gap = 16.0;
  const int cols = std::max<int>(1, static_cast<int>((kWidth - gap) / (panel_w + gap)));
  const int rows = static_cast<int>((panels.size() + cols - 1) / cols);
  const double total_h = 40.0 + rows * (panel_h + gap);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << total_h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const double ox = gap + (p % cols) * (panel_w + gap);
    const double oy = 36.0 + (p / cols) * (panel_h + gap);
    const CorrelationSequence& seq = panels[p].acf;
    const double band = 1.96 / std::sqrt(static_cast<double>(seq.n));
    out << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << panel_w << "\" height=\""
        << panel_h << "\" fill=\"none\" stroke=\"#aaaaaa\"/>\n"
        << "<text x=\"" << ox + panel_w / 2 << "\" y=\"" << oy + 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << panels[p].label << "</text>\n";
    auto px = [&](double lag) {
      return ox + 8.0 + (lag / (seq.lags.back() + 1.0)) * (panel_w - 16.0);
    };
    auto py = [&](double v) { return oy + panel_h / 2 - v * (panel_h / 2 - 24.0); };
    out << "<line x1=\"" << ox + 4 << "\" y1=\"" << py(0.0) << "\" x2=\"" << ox + panel_w - 4
        << "\" y2=\"" << py(0.0) << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    for (double b : {band, -band}) {
      out << "<line x1=\"" << ox + 4 << "\" y1=\"" << py(b) << "\" x2=\"" << ox + panel_w - 4
          << "\" y2=\"" << py(b) << "\" stroke=\"#2ca02c\" stroke-dasharray=\"3 3\"/>\n";
    }
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      const double v = std::clamp(seq.values[i], -1.0, 1.0);
      out << "<line x1=\"" << fmt(px(seq.lags[i])) << "\" y1=\"" << fmt(py(0.0)) << "\" x2=\""
          << fmt(px(seq.lags[i])) << "\" y2=\"" << fmt(py(v))
          << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
    }
  }
  out << "</svg>\n";
}

void write_histogram_csv(const std::string& path, const Histogram& h) {
  std::ofstream out = open_file(path);
  out << "bin_left,bin_right,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << fmt(h.bin_edges[i]) << ',' << fmt(h.bin_edges[i + 1]) << ',' << h.counts[i] << '\n';
  }
}

void write_correlation_csv(const std::string& path, const CorrelationSequence& seq) {
  std::ofstream out = open_file(path);
  const double band = 1.96 / std::sqrt(static_cast<double>(seq.n));
  out << "lag,value,band\n";
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    out << seq.lags[i] << ',' << fmt(seq.values[i]) << ',' << fmt(band) << '\n';
  }
}

void write_acf_windows_csv(const std::string& path, const std::vector<AcfWindow>& panels) {
  std::ofstream out = open_file(path);
  out << "window,lag,value\n";
  for (const AcfWindow& p : panels) {
    for (std::size_t i = 0; i < p.acf.values.size(); ++i) {
      out << p.label << ',' << p.acf.lags[i] << ',' << fmt(p.acf.values[i]) << '\n';
    }
  }
}

}  // namespace tsbreak::report
