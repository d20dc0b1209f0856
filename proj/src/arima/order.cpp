#include "tsbreak/arima/order.hpp"

#include <cstdio>

#include "tsbreak/errors.hpp"

namespace tsbreak::arima {

void ArimaOrder::normalize() {
  if (p < 0 || q < 0 || P < 0 || Q < 0 || d < 0 || D < 0) {
    throw InvalidArgumentError("ARIMA orders must be non-negative");
  }
  if (p > 6 || q > 6) throw InvalidArgumentError("p and q are capped at 6");
  if (d > 2) throw InvalidArgumentError("d is capped at 2");
  if (P > 1 || Q > 1 || D > 1) throw InvalidArgumentError("seasonal orders are capped at 1");
  if (period < 1) throw InvalidArgumentError("seasonal period must be >= 1");
  if ((P > 0 || D > 0 || Q > 0) && period < 2) {
    throw InvalidArgumentError("seasonal terms need period >= 2");
  }
  if (d + D > 0) include_mean = false;
}

std::string ArimaOrder::name() const {
  char buf[64];
  if (has_seasonal()) {
    std::snprintf(buf, sizeof(buf), "ARIMA(%d,%d,%d)(%d,%d,%d)[%d]", p, d, q, P, D, Q, period);
  } else {
    std::snprintf(buf, sizeof(buf), "ARIMA(%d,%d,%d)", p, d, q);
  }
  return buf;
}

}  // namespace tsbreak::arima
