#pragma once

#include "trendaudit/report.hpp"
#include "trendaudit/series.hpp"

// End-to-end spurious-correlation audit: align the two series, test every
// variant for a unit root, contrast the level correlation with the change
// correlation, diagnose residual autocorrelation, optionally calibrate a
// random-walk null against b, and derive the verdict.

namespace trendaudit {

AuditReport audit(const TimeSeries& a, const TimeSeries& b, const AuditConfig& config = {});

}  // namespace trendaudit
