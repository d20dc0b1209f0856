#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tsbreak/time_series.hpp"

namespace tsbreak::changepoint {

/// Lagged regression form of the series with one jump-parameter block per
/// time point. Row t (response x[t], t >= p_lag) carries the feature vector
/// (1, x[t-1], ..., x[t-p_lag]); the block for time point j contributes that
/// vector to row t iff t >= j, so the coefficient in force at time k is the
/// cumulative sum of jumps up to k. The full matrix is lower triangular in
/// blocks and never materialized except for tests.
class LaggedDesign {
 public:
  LaggedDesign(const TimeSeries& series, int p_lag);

  int p_lag() const { return p_lag_; }
  std::size_t num_time_points() const { return n_; }  // = block count
  std::size_t block_dim() const { return static_cast<std::size_t>(p_lag_) + 1; }
  std::size_t rows() const { return y_.size(); }

  const std::vector<double>& responses() const { return y_; }
  /// Feature vector of row r (series time p_lag + r).
  const double* row(std::size_t r) const { return features_.data() + r * block_dim(); }
  /// First row index where block j is active.
  std::size_t first_row_of_block(std::size_t j) const {
    return j <= static_cast<std::size_t>(p_lag_) ? 0 : j - p_lag_;
  }

  Date date_of_time(std::size_t j) const { return start_ + static_cast<std::int64_t>(j); }
  Date start_date() const { return start_; }

  /// Design over the leading `time_points` only (for rolling-window CV).
  LaggedDesign truncated(std::size_t time_points) const;

  /// Dense rows() x (n * block_dim) matrix; small inputs only.
  Eigen::MatrixXd dense() const;

 private:
  LaggedDesign() = default;
  int p_lag_ = 0;
  std::size_t n_ = 0;
  std::vector<double> y_;
  std::vector<double> features_;
  Date start_;
};

LaggedDesign build_design(const TimeSeries& series, int p_lag);

}  // namespace tsbreak::changepoint
