#include "tsbreak/changepoint/design.hpp"

namespace tsbreak::changepoint {

LaggedDesign::LaggedDesign(const TimeSeries& series, int p_lag) {
  if (p_lag < 0) throw InvalidArgumentError("p_lag must be >= 0");
  const std::size_t n = series.size();
  if (n < static_cast<std::size_t>(p_lag) + 2) {
    throw InsufficientDataError("series too short for lagged design (n=" + std::to_string(n) +
                                ", p_lag=" + std::to_string(p_lag) + ")");
  }
  p_lag_ = p_lag;
  n_ = n;
  start_ = series.start_date();
  const std::size_t dim = block_dim();
  y_.resize(n - p_lag);
  features_.resize((n - p_lag) * dim);
  for (std::size_t t = p_lag; t < n; ++t) {
    const std::size_t r = t - p_lag;
    y_[r] = series[t];
    features_[r * dim] = 1.0;
    for (int l = 1; l <= p_lag; ++l) {
      features_[r * dim + l] = series[t - l];
    }
  }
}

LaggedDesign LaggedDesign::truncated(std::size_t time_points) const {
  if (time_points <= static_cast<std::size_t>(p_lag_) + 1 || time_points > n_) {
    throw InvalidArgumentError("bad truncation length");
  }
  LaggedDesign out;
  out.p_lag_ = p_lag_;
  out.n_ = time_points;
  out.start_ = start_;
  const std::size_t keep_rows = time_points - p_lag_;
  out.y_.assign(y_.begin(), y_.begin() + keep_rows);
  out.features_.assign(features_.begin(), features_.begin() + keep_rows * block_dim());
  return out;
}

Eigen::MatrixXd LaggedDesign::dense() const {
  const std::size_t dim = block_dim();
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(rows(), n_ * dim);
  for (std::size_t r = 0; r < rows(); ++r) {
    const std::size_t t = r + p_lag_;
    for (std::size_t j = 0; j <= t; ++j) {
      for (std::size_t f = 0; f < dim; ++f) {
        z(r, j * dim + f) = row(r)[f];
      }
    }
  }
  return z;
}

LaggedDesign build_design(const TimeSeries& series, int p_lag) {
  return LaggedDesign(series, p_lag);
}

}  // namespace tsbreak::changepoint
