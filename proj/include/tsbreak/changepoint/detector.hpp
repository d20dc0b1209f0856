#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsbreak/arima/auto_fit.hpp"
#include "tsbreak/changepoint/fused_lasso.hpp"
#include "tsbreak/whiteness.hpp"

namespace tsbreak::changepoint {

struct DetectorConfig {
  int p_lag = 1;                      // AR order used for detection
  std::vector<double> lambda1_grid;   // decreasing; empty -> 50 log-spaced from lambda_max
  double lambda2 = 0.0;               // univariate case needs none
  double cv_window_fraction = 0.75;   // leading share of time points used to fit in CV
  double candidate_threshold = 1e-3;  // eta, relative to the largest jump block norm
  int min_gap = 7;                    // days; one seasonal period
  double screening_tau = 0.05;        // relative pooled-MSE improvement to keep a candidate
  int max_changepoints = 1000;

  void validate() const;
};

struct Candidate {
  std::size_t index = 0;  // series index of the first point under the new regime
  Date date;
  double magnitude = 0.0;  // ||beta_j||_2
};

struct CandidateSet {
  std::vector<Candidate> candidates;  // strictly increasing in time
  double lambda_selected = 0.0;
};

struct ScreeningRecord {
  std::size_t index = 0;
  Date date;
  double mse_with = 0.0;
  double mse_without = 0.0;
  bool kept = false;
  std::string reason;  // set when auto-removed without evaluation
};

struct SegmentFit {
  arima::ArimaModel model;
  std::optional<WhitenessReport> whiteness;
};

struct SegmentedModel {
  std::vector<Date> breakpoints;      // segments: [start, b1), [b1, b2), ...
  std::vector<SegmentFit> segments;   // breakpoints.size() + 1 entries
  std::vector<ScreeningRecord> screening_log;
  double lambda_selected = 0.0;
  CandidateSet candidates;  // pre-screening candidates, for reporting
};

class SegmentationError : public Error {
 public:
  SegmentationError(const std::string& what, SegmentedModel partial)
      : Error(what), partial_result(std::move(partial)) {}
  SegmentedModel partial_result;
};

/// 50 logarithmically spaced values from lambda_max down to 0.01*lambda_max,
/// so the null model is always on the path.
std::vector<double> default_lambda_grid(const LaggedDesign& design);

/// Rolling-window cross-validation: fit each lambda on the leading
/// cv_window_fraction of time points, score one-step squared forecast error
/// on the remainder with the last fitted per-time coefficients, return the
/// minimizer (ties toward larger lambda).
double select_lambda(const LaggedDesign& design, const DetectorConfig& config);

/// Threshold jump-block norms at eta * max norm, clamp away from the series
/// ends, and cluster anything closer than min_gap keeping the largest block.
CandidateSet extract_candidates(const FusedLassoResult& fit, const LaggedDesign& design,
                                const DetectorConfig& config);

/// MSE screening: keep a candidate iff splitting there reduces pooled
/// AR(p_lag)+intercept residual MSE by more than screening_tau relative to
/// the unsplit fit between its flanking neighbors. Candidates are processed
/// in decreasing jump magnitude and neighbors are re-evaluated after each
/// removal.
std::vector<Candidate> screen(const TimeSeries& series, const CandidateSet& candidates,
                              const DetectorConfig& config,
                              std::vector<ScreeningRecord>* log = nullptr);

/// auto_fit per stationary segment, with a whiteness report per segment.
SegmentedModel fit_segments(const TimeSeries& series, const std::vector<Date>& breakpoints,
                            const arima::ArimaOrder& bounds, const arima::FitConfig& fit_config);

/// Breakpoint estimation only: lambda selection, fused-lasso fit, candidate
/// extraction and screening (no per-segment ARIMA re-estimation).
struct BreakpointResult {
  std::vector<Candidate> breakpoints;
  std::vector<ScreeningRecord> screening_log;
  double lambda_selected = 0.0;
  CandidateSet candidates;
};
BreakpointResult detect_breakpoints(const TimeSeries& series, const DetectorConfig& config);

/// Full three-step procedure: detect_breakpoints then fit_segments.
SegmentedModel detect(const TimeSeries& series, const DetectorConfig& config,
                      const arima::ArimaOrder& fit_bounds = arima::default_auto_bounds(),
                      const arima::FitConfig& fit_config = {});

}  // namespace tsbreak::changepoint
