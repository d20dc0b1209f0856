#include "tsbreak/synth/piecewise.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace tsbreak::synth {

PiecewiseSeries gen_piecewise(const PiecewiseSpec& spec) {
  if (spec.segments.empty()) throw InvalidArgumentError("piecewise spec needs >= 1 segment");
  for (const PiecewiseSegment& seg : spec.segments) {
    if (seg.length < 20) {
      throw InvalidArgumentError("each piecewise segment needs length >= 20");
    }
  }

  arima::GaussianRng rng(spec.seed);
  std::vector<double> values;
  std::vector<std::size_t> breaks;
  for (std::size_t i = 0; i < spec.segments.size(); ++i) {
    const PiecewiseSegment& seg = spec.segments[i];
    if (i > 0) breaks.push_back(values.size());
    TimeSeries piece = arima::simulate_with_rng(seg.model, seg.length, rng);
    values.insert(values.end(), piece.values().begin(), piece.values().end());
  }
  return {TimeSeries(std::move(values), spec.start_date), std::move(breaks)};
}

namespace {

// Row statistics for AR(p)+intercept least squares, accumulated as prefix
// sums so any index range costs O(p^2) to assemble. Row t uses lags
// t-1..t-p, so a row belongs to segment [a, c) iff a+p <= t < c.
struct PrefixStats {
  int p;
  std::size_t n;
  // Flattened (p+1)x(p+1) Gram, (p+1) cross, and squared response prefix
  // sums; index r covers rows with t < r.
  std::vector<double> gram, cross, ysq;

  PrefixStats(std::span<const double> x, int p_lag) : p(p_lag), n(x.size()) {
    const int dim = p + 1;
    gram.assign((n + 1) * dim * dim, 0.0);
    cross.assign((n + 1) * dim, 0.0);
    ysq.assign(n + 1, 0.0);
    std::vector<double> w(dim);
    for (std::size_t t = 0; t < n; ++t) {
      double* g = gram.data() + (t + 1) * dim * dim;
      double* c = cross.data() + (t + 1) * dim;
      std::copy_n(gram.data() + t * dim * dim, dim * dim, g);
      std::copy_n(cross.data() + t * dim, dim, c);
      ysq[t + 1] = ysq[t];
      if (t < static_cast<std::size_t>(p)) continue;
      w[0] = 1.0;
      for (int l = 1; l <= p; ++l) w[l] = x[t - l];
      for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) g[a * dim + b] += w[a] * w[b];
        c[a] += w[a] * x[t];
      }
      ysq[t + 1] += x[t] * x[t];
    }
  }

  // SSE of the least-squares fit over rows t in [first+p, last).
  double sse(std::size_t first, std::size_t last) const {
    const int dim = p + 1;
    const std::size_t lo = std::min<std::size_t>(first + p, last);
    Eigen::MatrixXd g(dim, dim);
    Eigen::VectorXd c(dim);
    for (int a = 0; a < dim; ++a) {
      c(a) = cross[last * dim + a] - cross[lo * dim + a];
      for (int b = 0; b < dim; ++b) {
        g(a, b) = gram[last * dim * dim + a * dim + b] - gram[lo * dim * dim + a * dim + b];
      }
    }
    const double yy = ysq[last] - ysq[lo];
    if (g(0, 0) <= 0.5) return 0.0;  // fewer than one usable row
    Eigen::VectorXd b = g.completeOrthogonalDecomposition().solve(c);
    double value = yy - b.dot(c);
    return value > 0.0 ? value : 0.0;
  }
};

}  // namespace

OracleBreak oracle_single_break(const TimeSeries& series, int p_lag, int min_gap) {
  if (p_lag < 0 || min_gap < 1) throw InvalidArgumentError("bad oracle arguments");
  const std::size_t n = series.size();
  const std::size_t side = static_cast<std::size_t>(min_gap + p_lag + 2);
  if (n < 2 * side) {
    throw InsufficientDataError("oracle needs n >= 2*(min_gap + p_lag + 2)");
  }

  PrefixStats stats(series.span(), p_lag);
  OracleBreak out;
  out.unsplit_sse = stats.sse(0, n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t b = side; b + side <= n; ++b) {
    const double total = stats.sse(0, b) + stats.sse(b, n);
    if (total < best) {
      best = total;
      out.best_break = b;
    }
  }
  out.split_sse = best;
  out.sse_gain = out.unsplit_sse > 0.0 ? (out.unsplit_sse - best) / out.unsplit_sse : 0.0;
  return out;
}

}  // namespace tsbreak::synth
