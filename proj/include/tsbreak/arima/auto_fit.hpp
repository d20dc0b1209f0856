#pragma once

#include "tsbreak/arima/fit.hpp"

namespace tsbreak::arima {

/// Exhaustive order search. Within each differencing class (d, D) the best
/// model is chosen by AICc over the full p/q (and seasonal) grid; across
/// differencing classes — where AICc values are not comparable — selection
/// falls to one-step rolling-forecast MSE over the final 20% of the series.
/// Ties break toward fewer parameters, then smaller d, then smaller p.
/// `bounds` carries the grid maxima; its period>1 enables the seasonal grid.
ArimaModel auto_fit(const TimeSeries& series, const ArimaOrder& bounds,
                    const FitConfig& config = {});

/// Default search bounds used by the CLI: p,q <= 6, d <= 2, non-seasonal.
ArimaOrder default_auto_bounds();

}  // namespace tsbreak::arima
