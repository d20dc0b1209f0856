#include "tsbreak/differencing.hpp"

#include <cmath>

namespace tsbreak {

namespace {

std::vector<double> diff_once(const std::vector<double>& x, int lag) {
  std::vector<double> out(x.size() - lag);
  for (std::size_t t = lag; t < x.size(); ++t) {
    out[t - lag] = x[t] - x[t - lag];
  }
  return out;
}

// Neumaier-compensated a + b so reconstructed cumulative sums stay within
// 1e-9 of the original values even at ridership scale.
struct CompensatedSum {
  double s = 0.0, c = 0.0;
  void add(double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }
  double value() const { return s + c; }
};

}  // namespace

std::vector<double> difference_values(std::span<const double> values, int d, int seasonal_d,
                                      int period) {
  std::vector<double> w(values.begin(), values.end());
  for (int i = 0; i < d; ++i) w = diff_once(w, 1);
  for (int i = 0; i < seasonal_d; ++i) w = diff_once(w, period);
  return w;
}

DifferencedSeries difference(const TimeSeries& series, int d, int seasonal_d, int period) {
  if (d < 0 || d > 2) throw InvalidArgumentError("d must be in {0,1,2}");
  if (seasonal_d < 0 || seasonal_d > 1) throw InvalidArgumentError("D must be in {0,1}");
  if (period < 1) throw InvalidArgumentError("period must be >= 1");
  const std::size_t n = series.size();
  const std::size_t consumed = d + static_cast<std::size_t>(seasonal_d) * period;
  if (n <= consumed) {
    throw InsufficientDataError("series of length " + std::to_string(n) +
                                " too short to difference (d=" + std::to_string(d) +
                                ", D=" + std::to_string(seasonal_d) +
                                ", period=" + std::to_string(period) + ")");
  }

  DifferencedSeries out{series, d, seasonal_d, period, {}};
  std::vector<double> w = series.values();
  for (int i = 0; i < d; ++i) {
    out.initials.push_back({w[0]});
    w = diff_once(w, 1);
  }
  for (int i = 0; i < seasonal_d; ++i) {
    out.initials.emplace_back(w.begin(), w.begin() + period);
    w = diff_once(w, period);
  }
  out.series = TimeSeries(std::move(w), series.start_date() + static_cast<std::int64_t>(consumed),
                          series.frequency());
  return out;
}

TimeSeries integrate(const DifferencedSeries& diffed) {
  std::vector<double> w = diffed.series.values();
  // Undo stages in reverse order of application.
  for (int i = diffed.seasonal_d - 1; i >= 0; --i) {
    const std::vector<double>& init = diffed.initials[diffed.d + i];
    std::vector<double> x(w.size() + diffed.period);
    std::vector<CompensatedSum> chains(diffed.period);
    for (int j = 0; j < diffed.period; ++j) {
      chains[j].add(init[j]);
      x[j] = init[j];
    }
    for (std::size_t t = 0; t < w.size(); ++t) {
      chains[t % diffed.period].add(w[t]);
      x[t + diffed.period] = chains[t % diffed.period].value();
    }
    w = std::move(x);
  }
  for (int i = diffed.d - 1; i >= 0; --i) {
    const std::vector<double>& init = diffed.initials[i];
    std::vector<double> x(w.size() + 1);
    CompensatedSum chain;
    chain.add(init[0]);
    x[0] = init[0];
    for (std::size_t t = 0; t < w.size(); ++t) {
      chain.add(w[t]);
      x[t + 1] = chain.value();
    }
    w = std::move(x);
  }
  std::int64_t consumed = diffed.d + static_cast<std::int64_t>(diffed.seasonal_d) * diffed.period;
  return TimeSeries(std::move(w), diffed.series.start_date() - consumed,
                    diffed.series.frequency());
}

}  // namespace tsbreak
