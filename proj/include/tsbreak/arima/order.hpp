#pragma once

#include <string>

namespace tsbreak::arima {

/// SARIMA order (p,d,q)(P,D,Q)_s with an optional mean term. The mean is
/// only meaningful without differencing and is forced off otherwise.
struct ArimaOrder {
  int p = 0, d = 0, q = 0;
  int P = 0, D = 0, Q = 0;
  int period = 1;
  bool include_mean = true;

  ArimaOrder() = default;
  ArimaOrder(int p_, int d_, int q_) : p(p_), d(d_), q(q_) { normalize(); }
  ArimaOrder(int p_, int d_, int q_, int P_, int D_, int Q_, int s, bool mean = true)
      : p(p_), d(d_), q(q_), P(P_), D(D_), Q(Q_), period(s), include_mean(mean) {
    normalize();
  }

  /// Clamps include_mean and validates bounds; throws on invalid orders.
  void normalize();

  int num_coefficients() const { return p + q + P + Q; }
  bool has_seasonal() const { return P + D + Q > 0; }
  /// Observations consumed by differencing.
  int diff_consumed() const { return d + D * period; }

  std::string name() const;  // e.g. "ARIMA(1,0,2)" or "ARIMA(0,1,1)(0,1,1)[7]"
};

}  // namespace tsbreak::arima
