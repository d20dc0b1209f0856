#include "tsbreak/changepoint/fused_lasso.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace tsbreak::changepoint {

namespace {

constexpr double kColumnEps = 1e-14;

// Suffix Gram matrices G[r] = sum_{rr >= r} w_rr w_rr^T (row-major dim*dim),
// so the squared norm and cross products of any cumulative-block column are
// O(1) lookups.
std::vector<double> suffix_gram(const LaggedDesign& d) {
  const std::size_t dim = d.block_dim();
  const std::size_t R = d.rows();
  std::vector<double> g((R + 1) * dim * dim, 0.0);
  for (std::size_t r = R; r-- > 0;) {
    const double* w = d.row(r);
    double* cur = g.data() + r * dim * dim;
    const double* next = g.data() + (r + 1) * dim * dim;
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        cur[a * dim + b] = next[a * dim + b] + w[a] * w[b];
      }
    }
  }
  return g;
}

struct Workspace {
  const LaggedDesign& d;
  std::vector<double> gram;          // suffix Gram
  std::vector<double> residual;      // y - Z beta
  std::vector<double> beta;          // n_blocks * dim
  double penalty_l1 = 0.0;           // sum_{j>=1} ||beta_j||_1
  const std::size_t dim, R, n;

  explicit Workspace(const LaggedDesign& design)
      : d(design),
        gram(suffix_gram(design)),
        residual(design.responses()),
        beta(design.num_time_points() * design.block_dim(), 0.0),
        dim(design.block_dim()),
        R(design.rows()),
        n(design.num_time_points()) {}

  const double* gram_at(std::size_t r) const { return gram.data() + r * dim * dim; }

  void rebuild_residual() {
    // coefficient in force at time t is the cumulative sum of jumps
    std::vector<double> coef(dim, 0.0);
    std::size_t j = 0;
    penalty_l1 = 0.0;
    for (std::size_t r = 0; r < R; ++r) {
      const std::size_t t = r + d.p_lag();
      while (j <= t && j < n) {
        for (std::size_t f = 0; f < dim; ++f) coef[f] += beta[j * dim + f];
        ++j;
      }
      const double* w = d.row(r);
      double fit = 0.0;
      for (std::size_t f = 0; f < dim; ++f) fit += coef[f] * w[f];
      residual[r] = d.responses()[r] - fit;
    }
    for (std::size_t b = dim; b < beta.size(); ++b) penalty_l1 += std::abs(beta[b]);
  }

  double objective(double lambda1) const {
    double ss = 0.0;
    for (double v : residual) ss += v * v;
    return ss / static_cast<double>(n) + lambda1 * penalty_l1;
  }

  // One full descending pass over all blocks. Returns the largest
  // coefficient change. thr is the soft threshold n*lambda1/2 applied to
  // penalized blocks.
  double full_sweep(double thr) {
    double max_delta = 0.0;
    std::vector<double> s(dim, 0.0);
    std::size_t cur = R;  // rows [cur, R) are accumulated in s
    for (std::size_t j = n; j-- > 0;) {
      const std::size_t r0 = d.first_row_of_block(j);
      while (cur > r0) {
        --cur;
        const double* w = d.row(cur);
        for (std::size_t f = 0; f < dim; ++f) s[f] += w[f] * residual[cur];
      }
      const double* g = gram_at(r0);
      for (std::size_t f = 0; f < dim; ++f) {
        const double cs = g[f * dim + f];
        double& b = beta[j * dim + f];
        double target;
        if (cs <= kColumnEps) {
          target = 0.0;
          if (j == 0) continue;  // unpenalized coordinate with no support
        } else {
          const double corr = s[f] + b * cs;
          target = j == 0 ? corr / cs : soft_threshold(corr, thr) / cs;
        }
        const double delta = target - b;
        if (delta == 0.0) continue;
        if (j > 0) penalty_l1 += std::abs(target) - std::abs(b);
        b = target;
        for (std::size_t rr = r0; rr < R; ++rr) residual[rr] -= delta * d.row(rr)[f];
        for (std::size_t gg = 0; gg < dim; ++gg) s[gg] -= delta * g[gg * dim + f];
        max_delta = std::max(max_delta, std::abs(delta));
      }
    }
    return max_delta;
  }

  // Sweep only the given blocks (descending), computing correlations
  // directly; cheap when few blocks are active.
  double active_sweep(const std::vector<std::size_t>& blocks, double thr) {
    double max_delta = 0.0;
    for (std::size_t j : blocks) {
      const std::size_t r0 = d.first_row_of_block(j);
      const double* g = gram_at(r0);
      for (std::size_t f = 0; f < dim; ++f) {
        const double cs = g[f * dim + f];
        if (cs <= kColumnEps) continue;
        double zr = 0.0;
        for (std::size_t rr = r0; rr < R; ++rr) zr += d.row(rr)[f] * residual[rr];
        double& b = beta[j * dim + f];
        const double corr = zr + b * cs;
        const double target = j == 0 ? corr / cs : soft_threshold(corr, thr) / cs;
        const double delta = target - b;
        if (delta == 0.0) continue;
        if (j > 0) penalty_l1 += std::abs(target) - std::abs(b);
        b = target;
        for (std::size_t rr = r0; rr < R; ++rr) residual[rr] -= delta * d.row(rr)[f];
        max_delta = std::max(max_delta, std::abs(delta));
      }
    }
    return max_delta;
  }

  std::vector<std::size_t> active_blocks() const {
    std::vector<std::size_t> out;
    for (std::size_t j = n; j-- > 0;) {
      if (j == 0) {
        out.push_back(0);
        continue;
      }
      for (std::size_t f = 0; f < dim; ++f) {
        if (beta[j * dim + f] != 0.0) {
          out.push_back(j);
          break;
        }
      }
    }
    return out;
  }
};

KktReport kkt_pass(const LaggedDesign& d, std::span<const double> beta, double lambda1,
                   std::span<const double> residual) {
  const std::size_t dim = d.block_dim();
  const std::size_t n = d.num_time_points();
  const double scale = 2.0 / static_cast<double>(n);
  KktReport report;
  std::vector<double> s(dim, 0.0);
  std::size_t cur = d.rows();
  for (std::size_t j = n; j-- > 0;) {
    const std::size_t r0 = d.first_row_of_block(j);
    while (cur > r0) {
      --cur;
      const double* w = d.row(cur);
      for (std::size_t f = 0; f < dim; ++f) s[f] += w[f] * residual[cur];
    }
    for (std::size_t f = 0; f < dim; ++f) {
      const double grad = -scale * s[f];
      const double b = beta[j * dim + f];
      double violation;
      if (j == 0) {
        violation = std::abs(grad);
        report.max_active_violation = std::max(report.max_active_violation, violation);
      } else if (b != 0.0) {
        violation = std::abs(grad + lambda1 * (b > 0 ? 1.0 : -1.0));
        report.max_active_violation = std::max(report.max_active_violation, violation);
      } else {
        violation = std::max(0.0, std::abs(grad) - lambda1);
        report.max_zero_violation = std::max(report.max_zero_violation, violation);
      }
      report.max_violation = std::max(report.max_violation, violation);
    }
  }
  return report;
}

}  // namespace

std::vector<double> FusedLassoResult::cumulative_coefficients() const {
  std::vector<double> out(beta.size());
  std::vector<double> acc(block_dim, 0.0);
  for (std::size_t j = 0; j < num_blocks(); ++j) {
    for (std::size_t f = 0; f < block_dim; ++f) {
      acc[f] += beta[j * block_dim + f];
      out[j * block_dim + f] = acc[f];
    }
  }
  return out;
}

double lambda_max(const LaggedDesign& design) {
  const std::size_t dim = design.block_dim();
  const std::size_t R = design.rows();
  Eigen::MatrixXd w(R, dim);
  Eigen::VectorXd y(R);
  for (std::size_t r = 0; r < R; ++r) {
    y(r) = design.responses()[r];
    for (std::size_t f = 0; f < dim; ++f) w(r, f) = design.row(r)[f];
  }
  Eigen::VectorXd base = w.completeOrthogonalDecomposition().solve(y);
  Eigen::VectorXd res = y - w * base;

  double best = 0.0;
  std::vector<double> s(dim, 0.0);
  std::size_t cur = R;
  for (std::size_t j = design.num_time_points(); j-- > 1;) {
    const std::size_t r0 = design.first_row_of_block(j);
    while (cur > r0) {
      --cur;
      for (std::size_t f = 0; f < dim; ++f) s[f] += design.row(cur)[f] * res(cur);
    }
    for (std::size_t f = 0; f < dim; ++f) best = std::max(best, std::abs(s[f]));
  }
  return 2.0 * best / static_cast<double>(design.num_time_points());
}

FusedLassoResult fused_lasso_fit(const LaggedDesign& design, double lambda1, double lambda2,
                                 const std::vector<double>* warm_start, int max_sweeps) {
  if (lambda1 <= 0.0) throw InvalidArgumentError("lambda1 must be > 0");
  if (lambda2 < 0.0) throw InvalidArgumentError("lambda2 must be >= 0");

  Workspace ws(design);
  if (warm_start != nullptr) {
    if (warm_start->size() != ws.beta.size()) {
      throw InvalidArgumentError("warm start has wrong size");
    }
    ws.beta = *warm_start;
    ws.rebuild_residual();
  }

  const double thr = 0.5 * lambda1 * static_cast<double>(design.num_time_points());
  double y_scale = 0.0;
  for (double v : design.responses()) y_scale = std::max(y_scale, std::abs(v));
  const double coef_tol = 1e-9 * std::max(1.0, y_scale);
  const double kkt_tol = 1e-8 * std::max(1.0, lambda1);

  FusedLassoResult result;
  result.block_dim = design.block_dim();
  result.lambda1 = lambda1;
  result.lambda2 = lambda2;

  int sweeps = 0;
  bool converged = false;
  while (sweeps < max_sweeps) {
    double delta = ws.full_sweep(thr);
    ++sweeps;
    result.objective_trace.push_back(ws.objective(lambda1));

    // Polish the current active set before paying for another full pass.
    std::vector<std::size_t> active = ws.active_blocks();
    while (sweeps < max_sweeps) {
      double d2 = ws.active_sweep(active, thr);
      ++sweeps;
      result.objective_trace.push_back(ws.objective(lambda1));
      if (d2 <= coef_tol) break;
    }

    if (delta <= coef_tol) {
      ws.rebuild_residual();  // drop incremental drift before certifying
      KktReport kkt = kkt_pass(design, ws.beta, lambda1, ws.residual);
      if (kkt.max_violation <= kkt_tol) {
        converged = true;
        break;
      }
    }
  }

  result.beta = std::move(ws.beta);
  result.sweeps = sweeps;
  result.converged = converged;

  if (!converged) {
    throw LassoConvergenceError(
        "coordinate descent hit the sweep cap (" + std::to_string(max_sweeps) + ")",
        std::move(result));
  }

  if (lambda2 > 0.0) {
    // Pathwise-coordinate shortcut: solve with the fusion penalty alone,
    // then shrink the reconstructed per-time coefficients element-wise.
    std::vector<double> coef = result.cumulative_coefficients();
    for (double& c : coef) c = soft_threshold(c, lambda2);
    const std::size_t dim = result.block_dim;
    for (std::size_t j = result.num_blocks(); j-- > 0;) {
      for (std::size_t f = 0; f < dim; ++f) {
        const double prev = j == 0 ? 0.0 : coef[(j - 1) * dim + f];
        result.beta[j * dim + f] = coef[j * dim + f] - prev;
      }
    }
  }
  return result;
}

KktReport kkt_check(const LaggedDesign& design, const FusedLassoResult& result) {
  Workspace ws(design);
  ws.beta = result.beta;
  ws.rebuild_residual();
  return kkt_pass(design, ws.beta, result.lambda1, ws.residual);
}

}  // namespace tsbreak::changepoint
