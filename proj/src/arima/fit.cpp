#include "tsbreak/arima/fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "tsbreak/arima/likelihood.hpp"
#include "tsbreak/differencing.hpp"
#include "tsbreak/stats.hpp"

namespace tsbreak::arima {

namespace {

constexpr double kPenalty = 1e100;
constexpr std::uint64_t kRestartSeed = 0x5eed5eedULL;

struct NelderMeadResult {
  std::vector<double> x;
  double fx = kPenalty;
  bool converged = false;
};

// Standard Nelder-Mead simplex minimization. `steps` sets the initial
// simplex edge per dimension.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const std::vector<double>& steps,
                             int max_iterations, double tol) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> simplex(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += steps[i];
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fv[i] = f(simplex[i]);

  auto order_simplex = [&] {
    std::vector<std::size_t> idx(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s2(dim + 1);
    std::vector<double> f2(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = fv[idx[i]];
    }
    simplex.swap(s2);
    fv.swap(f2);
  };

  NelderMeadResult result;
  int iter = 0;
  for (; iter < max_iterations; ++iter) {
    order_simplex();
    double spread = std::abs(fv[dim] - fv[0]);
    if (spread <= tol * (std::abs(fv[0]) + tol)) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](double coef) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        p[j] = centroid[j] + coef * (simplex[dim][j] - centroid[j]);
      }
      return p;
    };

    std::vector<double> reflected = blend(-1.0);
    double fr = f(reflected);
    if (fr < fv[0]) {
      std::vector<double> expanded = blend(-2.0);
      double fe = f(expanded);
      if (fe < fr) {
        simplex[dim] = std::move(expanded);
        fv[dim] = fe;
      } else {
        simplex[dim] = std::move(reflected);
        fv[dim] = fr;
      }
    } else if (fr < fv[dim - 1]) {
      simplex[dim] = std::move(reflected);
      fv[dim] = fr;
    } else {
      std::vector<double> contracted = blend(fr < fv[dim] ? -0.5 : 0.5);
      double fc = f(contracted);
      if (fc < std::min(fr, fv[dim])) {
        simplex[dim] = std::move(contracted);
        fv[dim] = fc;
      } else {
        // Shrink toward the best vertex.
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          }
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  order_simplex();
  result.x = simplex[0];
  result.fx = fv[0];
  return result;
}

// Raw optimizer coordinates -> model coefficient blocks.
struct Coefficients {
  std::vector<double> phi, theta, seasonal_phi, seasonal_theta;
  double mean = 0.0;
};

Coefficients untransform(const ArimaOrder& order, std::span<const double> raw) {
  Coefficients c;
  std::size_t at = 0;
  c.phi = pacf_to_ar(raw.subspan(at, order.p));
  at += order.p;
  c.theta = pacf_to_ar(raw.subspan(at, order.q));
  for (double& t : c.theta) t = -t;  // invertible 1 + sum theta z^i
  at += order.q;
  c.seasonal_phi = pacf_to_ar(raw.subspan(at, order.P));
  at += order.P;
  c.seasonal_theta = pacf_to_ar(raw.subspan(at, order.Q));
  for (double& t : c.seasonal_theta) t = -t;
  at += order.Q;
  if (order.include_mean) c.mean = raw[at];
  return c;
}

std::vector<double> center(std::span<const double> w, double mean) {
  std::vector<double> out(w.begin(), w.end());
  if (mean != 0.0) {
    for (double& v : out) v -= mean;
  }
  return out;
}

ArimaModel closed_form_noise_model(const ArimaOrder& order, const std::vector<double>& w,
                                   const TimeSeries& series, Date diff_start) {
  ArimaModel model;
  model.order = order;
  model.mean = order.include_mean ? sample_mean(w) : 0.0;
  std::vector<double> centered = center(w, model.mean);
  double var = 0.0;
  for (double v : centered) var += v * v;
  var /= static_cast<double>(w.size());
  model.sigma2 = std::max(var, 1e-300);
  model.loglik = -0.5 * static_cast<double>(w.size()) *
                 (std::log(2.0 * std::numbers::pi * model.sigma2) + 1.0);
  model.criteria = information_criteria(model.loglik, model.parameter_count(), w.size());
  model.residuals = TimeSeries(std::move(centered), diff_start);
  model.fitted_series = series;
  return model;
}

}  // namespace

double loglikelihood(const ArimaOrder& order, std::span<const double> params,
                     const TimeSeries& differenced_series) {
  std::size_t expected = order.num_coefficients() + (order.include_mean ? 1 : 0);
  if (params.size() != expected) {
    throw InvalidArgumentError("expected " + std::to_string(expected) + " parameters, got " +
                               std::to_string(params.size()));
  }
  std::size_t at = 0;
  std::vector<double> phi(params.begin(), params.begin() + order.p);
  at += order.p;
  std::vector<double> theta(params.begin() + at, params.begin() + at + order.q);
  at += order.q;
  std::vector<double> sphi(params.begin() + at, params.begin() + at + order.P);
  at += order.P;
  std::vector<double> stheta(params.begin() + at, params.begin() + at + order.Q);
  at += order.Q;
  double mean = order.include_mean ? params[at] : 0.0;

  ExpandedArma full = expand_seasonal(phi, theta, sphi, stheta, order.period);
  RootReport roots = check_roots(full.phi, full.theta);
  if (!roots.causal) throw InvalidModelError("AR polynomial has a root inside the unit circle");

  std::vector<double> x = center(differenced_series.values(), mean);
  InnovationsResult r = arma_innovations(full.phi, full.theta, x, false);
  if (!std::isfinite(r.loglik)) throw NumericalError("non-finite log-likelihood");
  return r.loglik;
}

ArimaModel fit(const TimeSeries& series, ArimaOrder order, const FitConfig& config) {
  order.normalize();
  if (config.max_iterations < 1 || config.convergence_tol <= 0.0) {
    throw InvalidArgumentError("bad fit configuration");
  }
  const std::size_t n = series.size();
  const std::size_t min_n = 3 * static_cast<std::size_t>(order.num_coefficients()) +
                            order.diff_consumed() + 10;
  if (n <= min_n) {
    throw InsufficientDataError(order.name() + " needs n > " + std::to_string(min_n) + ", got " +
                                std::to_string(n));
  }

  std::vector<double> w = difference_values(series.span(), order.d, order.D, order.period);
  Date diff_start = series.start_date() + order.diff_consumed();

  // Deterministic inputs (for example a noiseless seasonal fixture fully
  // removed by differencing) leave nothing to estimate.
  double scale = 0.0;
  for (double v : w) scale = std::max(scale, std::abs(v));
  if (sample_variance(w) <= 1e-24 * std::max(1.0, scale * scale)) {
    ArimaOrder null_order = order;
    null_order.p = null_order.q = null_order.P = null_order.Q = 0;
    return closed_form_noise_model(null_order, w, series, diff_start);
  }

  const int dim = order.num_coefficients() + (order.include_mean ? 1 : 0);
  if (order.num_coefficients() == 0) {
    // Pure noise model: mean and variance have closed forms.
    return closed_form_noise_model(order, w, series, diff_start);
  }

  const double w_mean = sample_mean(w);
  const double w_sd = std::sqrt(sample_variance(w));

  auto objective_ml = [&](std::span<const double> raw) -> double {
    Coefficients c = untransform(order, raw);
    ExpandedArma full =
        expand_seasonal(c.phi, c.theta, c.seasonal_phi, c.seasonal_theta, order.period);
    try {
      std::vector<double> x = center(w, c.mean);
      InnovationsResult r = arma_innovations(full.phi, full.theta, x, false);
      return std::isfinite(r.loglik) ? -r.loglik : kPenalty;
    } catch (const Error&) {
      return kPenalty;
    }
  };
  auto objective_css = [&](std::span<const double> raw) -> double {
    Coefficients c = untransform(order, raw);
    ExpandedArma full =
        expand_seasonal(c.phi, c.theta, c.seasonal_phi, c.seasonal_theta, order.period);
    try {
      std::vector<double> x = center(w, c.mean);
      double css = arma_css(full.phi, full.theta, x);
      return css > 0.0 && std::isfinite(css) ? 0.5 * std::log(css) : kPenalty;
    } catch (const Error&) {
      return kPenalty;
    }
  };

  std::vector<double> steps(dim, 0.2);
  std::vector<double> start(dim, 0.0);
  if (order.include_mean) {
    start[dim - 1] = w_mean;
    steps[dim - 1] = 0.1 * w_sd + 1e-8;
  }

  // CSS pre-stage gives the exact-likelihood stage a good starting point.
  std::vector<std::vector<double>> starts;
  if (config.estimation == EstimationMethod::CSSThenML) {
    NelderMeadResult css = nelder_mead(objective_css, start, steps, config.max_iterations,
                                       std::max(config.convergence_tol, 1e-9));
    starts.push_back(css.x);
  }
  starts.push_back(start);
  std::mt19937_64 rng(kRestartSeed);
  std::normal_distribution<double> jitter(0.0, 0.4);
  for (int r = 0; r < config.optimizer_restarts; ++r) {
    std::vector<double> s = starts.front();
    for (int j = 0; j < dim; ++j) {
      s[j] += jitter(rng) * (order.include_mean && j == dim - 1 ? w_sd : 1.0);
    }
    starts.push_back(std::move(s));
  }

  std::function<double(std::span<const double>)> objective = objective_ml;
  if (config.estimation == EstimationMethod::CSS) objective = objective_css;
  NelderMeadResult best;
  bool any_converged = false;
  for (const auto& s : starts) {
    NelderMeadResult r =
        nelder_mead(objective, s, steps, config.max_iterations, config.convergence_tol);
    any_converged = any_converged || (r.converged && r.fx < kPenalty);
    if (r.fx < best.fx) best = r;
  }
  if (best.fx >= kPenalty) {
    throw NumericalError("likelihood not finite anywhere the optimizer looked");
  }

  Coefficients c = untransform(order, best.x);
  ArimaModel model;
  model.order = order;
  model.phi = c.phi;
  model.theta = c.theta;
  model.seasonal_phi = c.seasonal_phi;
  model.seasonal_theta = c.seasonal_theta;
  model.mean = c.mean;

  ExpandedArma full = model.expanded();
  std::vector<double> x = center(w, c.mean);
  InnovationsResult r = arma_innovations(full.phi, full.theta, x, true);
  model.sigma2 = r.sigma2_hat;
  model.loglik = r.loglik;
  model.criteria = information_criteria(model.loglik, model.parameter_count(), w.size());
  model.residuals = TimeSeries(std::move(r.residuals), diff_start);
  model.fitted_series = series;

  if (!any_converged) {
    throw FitConvergenceError("optimizer failed to converge after " +
                                  std::to_string(starts.size()) + " starts for " + order.name(),
                              std::move(model));
  }
  return model;
}

}  // namespace tsbreak::arima
