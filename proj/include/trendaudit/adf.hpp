#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "trendaudit/series.hpp"

// Augmented Dickey-Fuller unit-root test. The null is a unit root; large
// negative statistics reject it (the series looks stationary).

namespace trendaudit {

enum class Deterministic { none, constant, constant_trend };

const char* deterministic_name(Deterministic det);
Deterministic deterministic_from_name(const std::string& name);

struct AdfResult {
    // t-ratio on the lagged level in the ADF regression.
    double statistic = 0.0;
    int lags = 0;
    Deterministic deterministic = Deterministic::constant;
    std::size_t n_effective = 0;
    // Finite-sample critical values (MacKinnon 2010 response surface).
    double crit_1pct = 0.0;
    double crit_5pct = 0.0;
    double crit_10pct = 0.0;
    bool reject_at_5pct = false;
    // Approximate p by monotone interpolation over an embedded quantile
    // table, clamped to [0.001, 0.999]. The statistic-vs-critical-value
    // verdict is the primary contract; this is a rough companion number.
    std::optional<double> approx_p;
};

// Fits dy_t = alpha [+ delta*t] + gamma*y_{t-1} + sum_j phi_j*dy_{t-j} + u_t
// and reports the t-ratio on gamma. Requires length >= lags + 10.
AdfResult adf_test(const TimeSeries& s, int lags = 1,
                   Deterministic det = Deterministic::constant);

// The approximate p-value mapping on its own (monotone in the statistic).
double adf_approx_p(double statistic, std::size_t n_effective, Deterministic det);

}  // namespace trendaudit
