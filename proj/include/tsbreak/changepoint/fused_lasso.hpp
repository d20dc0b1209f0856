#pragma once

#include <span>
#include <vector>

#include "tsbreak/changepoint/design.hpp"
#include "tsbreak/errors.hpp"

namespace tsbreak::changepoint {

/// Proximal map of the L1 penalty: sign(v) * max(|v| - t, 0).
inline double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

struct FusedLassoResult {
  /// Jump coefficients, num_time_points blocks of block_dim values. Block 0
  /// (the base coefficients) is never penalized.
  std::vector<double> beta;
  std::size_t block_dim = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int sweeps = 0;
  bool converged = false;
  /// Objective value after every sweep (monotone non-increasing).
  std::vector<double> objective_trace;

  std::span<const double> block(std::size_t j) const {
    return {beta.data() + j * block_dim, block_dim};
  }
  std::size_t num_blocks() const { return block_dim == 0 ? 0 : beta.size() / block_dim; }
  /// Per-time-point coefficients: cumulative sums of the jump blocks.
  std::vector<double> cumulative_coefficients() const;
};

class LassoConvergenceError : public ConvergenceError {
 public:
  LassoConvergenceError(const std::string& what, FusedLassoResult last)
      : ConvergenceError(what), last_iterate(std::move(last)) {}
  FusedLassoResult last_iterate;
};

/// Smallest lambda1 that zeroes every jump block (the base block is fit
/// unpenalized first).
double lambda_max(const LaggedDesign& design);

/// Minimizes (1/n)||Y - Z B||^2 + lambda1 * sum_{j>=1} ||beta_j||_1 in the
/// cumulative-jump parametrization by cyclic coordinate descent with
/// active-set sweeps; n is the number of time points. Convergence requires
/// both a small coefficient change and KKT residuals within tolerance. For
/// lambda2 > 0 the reconstructed per-time coefficients are element-wise
/// soft-thresholded afterwards and re-differenced into jumps.
FusedLassoResult fused_lasso_fit(const LaggedDesign& design, double lambda1, double lambda2 = 0.0,
                                 const std::vector<double>* warm_start = nullptr,
                                 int max_sweeps = 100000);

/// KKT residuals of a solution: max over unpenalized coordinates of
/// |gradient|, and over penalized ones of the subgradient violation.
struct KktReport {
  double max_violation = 0.0;       // overall
  double max_zero_violation = 0.0;  // |g| - lambda1 over zero coordinates, clipped at 0
  double max_active_violation = 0.0;
};
KktReport kkt_check(const LaggedDesign& design, const FusedLassoResult& result);

}  // namespace tsbreak::changepoint
