#include "tsbreak/arima/auto_fit.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "tsbreak/arima/forecast.hpp"

namespace tsbreak::arima {

namespace {

struct ClassWinner {
  ArimaModel model;
  double aicc = std::numeric_limits<double>::infinity();
  double rolling_mse = std::numeric_limits<double>::infinity();
};

// Models within this many AICc units of the class minimum are statistically
// indistinguishable; the tie-break toward fewer parameters applies across
// the whole band, which keeps an exhaustive grid from drifting to
// overparametrized near-ties.
constexpr double kAiccTieBand = 2.0;

bool more_parsimonious(const ArimaModel& a, const ArimaModel& b) {
  if (a.parameter_count() != b.parameter_count()) {
    return a.parameter_count() < b.parameter_count();
  }
  if (a.criteria.aicc != b.criteria.aicc) return a.criteria.aicc < b.criteria.aicc;
  if (a.order.d != b.order.d) return a.order.d < b.order.d;
  if (a.order.p != b.order.p) return a.order.p < b.order.p;
  return a.order.q < b.order.q;
}

// Minimal AICc, with everything inside the tie band resolved by parsimony.
std::size_t select_in_class(const std::vector<ArimaModel>& fits) {
  double min_aicc = std::numeric_limits<double>::infinity();
  for (const ArimaModel& m : fits) min_aicc = std::min(min_aicc, m.criteria.aicc);
  std::size_t pick = fits.size();
  for (std::size_t i = 0; i < fits.size(); ++i) {
    if (fits[i].criteria.aicc > min_aicc + kAiccTieBand) continue;
    if (pick == fits.size() || more_parsimonious(fits[i], fits[pick])) pick = i;
  }
  return pick;
}

bool better_across_class(const ClassWinner& a, const ClassWinner& b) {
  if (a.rolling_mse != b.rolling_mse) return a.rolling_mse < b.rolling_mse;
  int ka = a.model.parameter_count(), kb = b.model.parameter_count();
  if (ka != kb) return ka < kb;
  if (a.model.order.d != b.model.order.d) return a.model.order.d < b.model.order.d;
  return a.model.order.p < b.model.order.p;
}

// Boundary fits breed cancellation artifacts (an ARMA pair chasing a common
// root inflates the likelihood without describing anything, and the reduced
// order is already on the grid), so candidates must keep every root modulus
// at or above kAdmissibleRootMargin and every AR root at least
// kCancellationLimit away from every MA root.
constexpr double kAdmissibleRootMargin = 1.01;
constexpr double kCancellationLimit = 0.15;

bool admissible(const ArimaModel& model) {
  ExpandedArma full = model.expanded();
  std::vector<double> ar_tail(full.phi);
  for (double& c : ar_tail) c = -c;
  std::vector<std::complex<double>> ar = polynomial_roots(ar_tail);
  std::vector<std::complex<double>> ma = polynomial_roots(full.theta);
  for (const auto& r : ar) {
    if (std::abs(r) < kAdmissibleRootMargin) return false;
  }
  for (const auto& r : ma) {
    if (std::abs(r) < kAdmissibleRootMargin) return false;
  }
  for (const auto& a : ar) {
    for (const auto& m : ma) {
      if (std::abs(a - m) < kCancellationLimit) return false;
    }
  }
  return true;
}

std::optional<ArimaModel> try_fit(const TimeSeries& series, const ArimaOrder& order,
                                  const FitConfig& config) {
  try {
    ArimaModel m = fit(series, order, config);
    if (!admissible(m)) return std::nullopt;
    return m;
  } catch (const FitConvergenceError& e) {
    if (!admissible(e.best_model)) return std::nullopt;
    return e.best_model;  // still a valid causal/invertible candidate
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

ArimaOrder default_auto_bounds() {
  ArimaOrder bounds;
  bounds.p = 6;
  bounds.q = 6;
  bounds.d = 2;
  return bounds;
}

ArimaModel auto_fit(const TimeSeries& series, const ArimaOrder& bounds, const FitConfig& config) {
  const std::size_t n = series.size();
  const bool seasonal = bounds.period > 1;
  std::vector<ClassWinner> winners;

  for (int d = 0; d <= bounds.d; ++d) {
    for (int D = 0; D <= (seasonal ? bounds.D : 0); ++D) {
      std::vector<ArimaModel> fits;
      for (int p = 0; p <= bounds.p; ++p) {
        for (int q = 0; q <= bounds.q; ++q) {
          for (int P = 0; P <= (seasonal ? bounds.P : 0); ++P) {
            for (int Q = 0; Q <= (seasonal ? bounds.Q : 0); ++Q) {
              ArimaOrder order(p, d, q, P, D, Q, bounds.period, bounds.include_mean);
              std::optional<ArimaModel> m = try_fit(series, order, config);
              if (m) fits.push_back(std::move(*m));
            }
          }
        }
      }
      std::size_t pick = select_in_class(fits);
      if (pick < fits.size()) {
        ClassWinner winner;
        winner.model = std::move(fits[pick]);
        winner.aicc = winner.model.criteria.aicc;
        winners.push_back(std::move(winner));
      }
    }
  }
  if (winners.empty()) {
    throw ConvergenceError("auto_fit: every candidate order failed to fit");
  }
  if (winners.size() == 1) return winners.front().model;

  // Score each class winner out of sample: refit its order on the leading
  // 80% and take the mean squared one-step error over the holdout.
  const std::size_t holdout = std::max<std::size_t>(1, n / 5);
  const std::size_t train_len = n - holdout;
  for (ClassWinner& w : winners) {
    try {
      TimeSeries train = series.slice(0, train_len);
      ArimaModel m = fit(train, w.model.order, config);
      std::vector<double> preds = one_step_predictions(m, series.span(), train_len);
      double sse = 0.0;
      for (std::size_t i = 0; i < preds.size(); ++i) {
        double e = series[train_len + i] - preds[i];
        sse += e * e;
      }
      w.rolling_mse = sse / static_cast<double>(preds.size());
    } catch (const Error&) {
      w.rolling_mse = std::numeric_limits<double>::infinity();
    }
  }

  const ClassWinner* best = &winners.front();
  for (const ClassWinner& w : winners) {
    if (better_across_class(w, *best)) best = &w;
  }
  return best->model;
}

}  // namespace tsbreak::arima
