#include "tsbreak/changepoint/detector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace tsbreak::changepoint {

namespace {

// Least-squares AR(p)+intercept fit over series rows t in [first+p, last),
// all lags inside [first, last). Returns SSE and the row count.
struct SegmentLsq {
  double sse = 0.0;
  std::size_t rows = 0;
};

SegmentLsq segment_lsq(std::span<const double> x, std::size_t first, std::size_t last, int p) {
  SegmentLsq out;
  const std::size_t lo = first + p;
  if (last <= lo) return out;
  out.rows = last - lo;
  const int dim = p + 1;
  Eigen::MatrixXd w(out.rows, dim);
  Eigen::VectorXd y(out.rows);
  for (std::size_t t = lo; t < last; ++t) {
    const std::size_t r = t - lo;
    y(r) = x[t];
    w(r, 0) = 1.0;
    for (int l = 1; l <= p; ++l) w(r, l) = x[t - l];
  }
  Eigen::VectorXd b = w.completeOrthogonalDecomposition().solve(y);
  out.sse = (y - w * b).squaredNorm();
  return out;
}

}  // namespace

void DetectorConfig::validate() const {
  if (p_lag < 0) throw InvalidArgumentError("p_lag must be >= 0");
  if (min_gap < 1) throw InvalidArgumentError("min_gap must be >= 1");
  if (min_gap <= p_lag) throw InvalidArgumentError("min_gap must exceed p_lag");
  if (cv_window_fraction <= 0.0 || cv_window_fraction >= 1.0) {
    throw InvalidArgumentError("cv_window_fraction must be in (0,1)");
  }
  if (candidate_threshold <= 0.0) throw InvalidArgumentError("candidate_threshold must be > 0");
  if (screening_tau <= 0.0 || screening_tau >= 1.0) {
    throw InvalidArgumentError("screening_tau must be in (0,1)");
  }
  if (lambda2 < 0.0) throw InvalidArgumentError("lambda2 must be >= 0");
  if (max_changepoints < 0) throw InvalidArgumentError("max_changepoints must be >= 0");
  for (std::size_t i = 1; i < lambda1_grid.size(); ++i) {
    if (!(lambda1_grid[i] < lambda1_grid[i - 1])) {
      throw InvalidArgumentError("lambda1_grid must be strictly decreasing");
    }
  }
  if (!lambda1_grid.empty() && lambda1_grid.back() <= 0.0) {
    throw InvalidArgumentError("lambda1_grid values must be positive");
  }
}

std::vector<double> default_lambda_grid(const LaggedDesign& design) {
  const double top = lambda_max(design);
  if (!(top > 0.0)) return {};
  std::vector<double> grid(50);
  const double ratio = std::pow(0.01, 1.0 / 49.0);
  double v = top;
  for (int i = 0; i < 50; ++i) {
    grid[i] = v;
    v *= ratio;
  }
  return grid;
}

double select_lambda(const LaggedDesign& design, const DetectorConfig& config) {
  std::vector<double> grid = config.lambda1_grid;
  if (grid.empty()) grid = default_lambda_grid(design);
  if (grid.empty()) throw InvalidArgumentError("empty lambda grid and degenerate lambda_max");
  std::sort(grid.begin(), grid.end(), std::greater<double>());
  if (grid.size() == 1) return grid.front();

  const std::size_t n = design.num_time_points();
  std::size_t t_cv = static_cast<std::size_t>(config.cv_window_fraction * static_cast<double>(n));
  t_cv = std::min(t_cv, n - 1);
  t_cv = std::max(t_cv, static_cast<std::size_t>(design.p_lag()) + 2);
  LaggedDesign train = design.truncated(t_cv);

  const std::size_t dim = design.block_dim();
  double best_lambda = grid.front();
  double best_mse = std::numeric_limits<double>::infinity();
  std::vector<double> warm;
  for (double lambda : grid) {
    FusedLassoResult fit;
    try {
      fit = fused_lasso_fit(train, lambda, 0.0, warm.empty() ? nullptr : &warm);
    } catch (const LassoConvergenceError& e) {
      fit = e.last_iterate;
    }
    warm = fit.beta;

    // Forecast the held-out rows with the last fitted coefficients.
    std::vector<double> coef = fit.cumulative_coefficients();
    std::span<const double> last(coef.data() + (t_cv - 1) * dim, dim);
    double sse = 0.0;
    std::size_t count = 0;
    for (std::size_t t = t_cv; t < n; ++t) {
      const std::size_t r = t - design.p_lag();
      const double* w = design.row(r);
      double pred = 0.0;
      for (std::size_t f = 0; f < dim; ++f) pred += last[f] * w[f];
      const double err = design.responses()[r] - pred;
      sse += err * err;
      ++count;
    }
    const double mse = sse / static_cast<double>(count);
    if (mse < best_mse) {
      best_mse = mse;
      best_lambda = lambda;
    }
  }
  return best_lambda;
}

CandidateSet extract_candidates(const FusedLassoResult& fit, const LaggedDesign& design,
                                const DetectorConfig& config) {
  const std::size_t n = design.num_time_points();
  const std::size_t dim = fit.block_dim;
  std::vector<double> norms(n, 0.0);
  double max_norm = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    double s = 0.0;
    for (std::size_t f = 0; f < dim; ++f) {
      const double b = fit.beta[j * dim + f];
      s += b * b;
    }
    norms[j] = std::sqrt(s);
    max_norm = std::max(max_norm, norms[j]);
  }

  CandidateSet out;
  out.lambda_selected = fit.lambda1;
  if (max_norm <= 0.0) return out;

  const double threshold = config.candidate_threshold * max_norm;
  std::vector<Candidate> raw;
  const std::size_t gap = static_cast<std::size_t>(config.min_gap);
  for (std::size_t j = 1; j < n; ++j) {
    if (norms[j] <= threshold) continue;
    if (j < gap || j + gap > n) continue;  // both segments must reach min_gap
    raw.push_back({j, design.date_of_time(j), norms[j]});
  }

  // Cluster raw candidates closer than min_gap, keeping the largest jump.
  for (const Candidate& c : raw) {
    if (!out.candidates.empty() &&
        c.index - out.candidates.back().index < static_cast<std::size_t>(config.min_gap)) {
      if (c.magnitude > out.candidates.back().magnitude) out.candidates.back() = c;
    } else {
      out.candidates.push_back(c);
    }
  }
  return out;
}

std::vector<Candidate> screen(const TimeSeries& series, const CandidateSet& candidates,
                              const DetectorConfig& config, std::vector<ScreeningRecord>* log) {
  const std::size_t n = series.size();
  const int p = config.p_lag;
  std::vector<Candidate> retained = candidates.candidates;
  std::sort(retained.begin(), retained.end(),
            [](const Candidate& a, const Candidate& b) { return a.index < b.index; });

  // Evaluation queue ordered by decreasing jump magnitude; a removal puts
  // both flanking neighbors back under review.
  auto queue_order = [&](std::size_t a, std::size_t b) {
    const Candidate& ca = retained[a];
    const Candidate& cb = retained[b];
    if (ca.magnitude != cb.magnitude) return ca.magnitude > cb.magnitude;
    return ca.index < cb.index;
  };

  std::vector<bool> alive(retained.size(), true);
  std::vector<bool> pending(retained.size(), true);

  auto neighbors = [&](std::size_t i) {
    std::pair<std::size_t, std::size_t> bounds{0, n};
    for (std::size_t k = i; k-- > 0;) {
      if (alive[k]) {
        bounds.first = retained[k].index;
        break;
      }
    }
    for (std::size_t k = i + 1; k < retained.size(); ++k) {
      if (alive[k]) {
        bounds.second = retained[k].index;
        break;
      }
    }
    return bounds;
  };

  auto mark_neighbors_pending = [&](std::size_t i) {
    for (std::size_t k = i; k-- > 0;) {
      if (alive[k]) {
        pending[k] = true;
        break;
      }
    }
    for (std::size_t k = i + 1; k < retained.size(); ++k) {
      if (alive[k]) {
        pending[k] = true;
        break;
      }
    }
  };

  while (true) {
    std::size_t next = retained.size();
    for (std::size_t i = 0; i < retained.size(); ++i) {
      if (!alive[i] || !pending[i]) continue;
      if (next == retained.size() || queue_order(i, next)) next = i;
    }
    if (next == retained.size()) break;
    pending[next] = false;

    auto [left, right] = neighbors(next);
    const std::size_t m = retained[next].index;
    ScreeningRecord rec;
    rec.index = m;
    rec.date = retained[next].date;

    if (m - left < static_cast<std::size_t>(p) + 2 || right - m < static_cast<std::size_t>(p) + 2) {
      rec.kept = false;
      rec.reason = "segment shorter than p_lag+2";
      alive[next] = false;
      mark_neighbors_pending(next);
      if (log) log->push_back(rec);
      continue;
    }

    SegmentLsq l = segment_lsq(series.span(), left, m, p);
    SegmentLsq r = segment_lsq(series.span(), m, right, p);
    SegmentLsq u = segment_lsq(series.span(), left, right, p);
    rec.mse_with = (l.sse + r.sse) / static_cast<double>(l.rows + r.rows);
    rec.mse_without = u.sse / static_cast<double>(u.rows);
    const double gain =
        rec.mse_without > 0.0 ? (rec.mse_without - rec.mse_with) / rec.mse_without : 0.0;
    rec.kept = gain > config.screening_tau;
    if (!rec.kept) {
      alive[next] = false;
      mark_neighbors_pending(next);
    }
    if (log) log->push_back(rec);
  }

  std::vector<Candidate> out;
  for (std::size_t i = 0; i < retained.size(); ++i) {
    if (alive[i]) out.push_back(retained[i]);
  }

  if (out.size() > static_cast<std::size_t>(config.max_changepoints)) {
    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.magnitude > b.magnitude; });
    out.resize(config.max_changepoints);
    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.index < b.index; });
  }
  return out;
}

BreakpointResult detect_breakpoints(const TimeSeries& series, const DetectorConfig& config) {
  config.validate();
  const std::size_t n = series.size();
  if (n <= static_cast<std::size_t>(config.p_lag) + 2 * static_cast<std::size_t>(config.min_gap)) {
    throw InsufficientDataError("series too short for detection: n=" + std::to_string(n));
  }

  BreakpointResult out;
  LaggedDesign design = build_design(series, config.p_lag);
  if (!(lambda_max(design) > 0.0)) {
    return out;  // base model already fits perfectly; nothing to detect
  }
  out.lambda_selected = select_lambda(design, config);

  FusedLassoResult fit;
  try {
    fit = fused_lasso_fit(design, out.lambda_selected, config.lambda2);
  } catch (const LassoConvergenceError& e) {
    fit = e.last_iterate;
  }
  out.candidates = extract_candidates(fit, design, config);
  out.breakpoints = screen(series, out.candidates, config, &out.screening_log);
  return out;
}

SegmentedModel fit_segments(const TimeSeries& series, const std::vector<Date>& breakpoints,
                            const arima::ArimaOrder& bounds,
                            const arima::FitConfig& fit_config) {
  SegmentedModel out;
  out.breakpoints = breakpoints;
  std::sort(out.breakpoints.begin(), out.breakpoints.end());

  std::vector<std::size_t> cuts{0};
  for (const Date& b : out.breakpoints) cuts.push_back(series.index_of(b));
  cuts.push_back(series.size());
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (cuts[i] <= cuts[i - 1]) {
      throw InvalidArgumentError("breakpoints must be strictly increasing inside the series");
    }
  }

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    TimeSeries segment = series.slice(cuts[i], cuts[i + 1]);
    try {
      SegmentFit sf;
      sf.model = arima::auto_fit(segment, bounds, fit_config);
      const TimeSeries& resid = *sf.model.residuals;
      int h = default_whiteness_lags(resid.size(), sf.model.order.num_coefficients());
      if (h > 0) {
        sf.whiteness = whiteness_test(resid, h, sf.model.order.num_coefficients());
      }
      out.segments.push_back(std::move(sf));
    } catch (const Error& e) {
      throw SegmentationError("segment " + std::to_string(i + 1) + " [" +
                                  segment.start_date().to_iso() + ", " +
                                  segment.end_date().to_iso() + "] failed: " + e.what(),
                              std::move(out));
    }
  }
  return out;
}

SegmentedModel detect(const TimeSeries& series, const DetectorConfig& config,
                      const arima::ArimaOrder& fit_bounds, const arima::FitConfig& fit_config) {
  BreakpointResult breaks = detect_breakpoints(series, config);
  std::vector<Date> dates;
  for (const Candidate& c : breaks.breakpoints) dates.push_back(c.date);
  SegmentedModel out = fit_segments(series, dates, fit_bounds, fit_config);
  out.screening_log = std::move(breaks.screening_log);
  out.lambda_selected = breaks.lambda_selected;
  out.candidates = std::move(breaks.candidates);
  return out;
}

}  // namespace tsbreak::changepoint
