#pragma once

#include <cstdint>
#include <random>

#include "tsbreak/arima/model.hpp"
#include "tsbreak/time_series.hpp"

namespace tsbreak::arima {

/// Deterministic standard-normal stream: Box-Muller on top of mt19937_64,
/// so a fixed seed yields the identical sequence on every run and platform.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}
  double next();

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

inline constexpr int kDefaultBurnIn = -1;  // resolve from the order

int default_burn_in(const ArimaOrder& order);

/// Draws Gaussian innovations with variance model.sigma2, runs the ARMA
/// recursion from zero initial state through `burn_in` warm-up steps, then
/// integrates for d and D. Identical seed implies identical output.
TimeSeries simulate(const ArimaModel& model, std::size_t n, std::uint64_t seed,
                    int burn_in = kDefaultBurnIn, Date start_date = Date::from_ymd(2019, 1, 1));

/// Same recursion drawing from a caller-owned stream (used by the piecewise
/// generator so segments share one seeded source).
TimeSeries simulate_with_rng(const ArimaModel& model, std::size_t n, GaussianRng& rng,
                             int burn_in = kDefaultBurnIn,
                             Date start_date = Date::from_ymd(2019, 1, 1));

}  // namespace tsbreak::arima
