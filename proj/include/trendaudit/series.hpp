#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Time-series container plus the transforms every analysis consumes:
// alignment by calendar stamp, first differences, linear detrending and
// the centered moving average.

namespace trendaudit {

// Ordered (time, value) observations. Stamps are integer years, strictly
// increasing; values are finite. Use make() so the invariants hold.
struct TimeSeries {
    std::vector<std::int64_t> times;
    std::vector<double> values;
    std::string label;

    static TimeSeries make(std::vector<std::int64_t> times, std::vector<double> values,
                           std::string label = {});

    std::size_t size() const { return values.size(); }

    // Throws InvalidSeries if any invariant is broken.
    void validate() const;
};

// Intersection-by-time pairing of two series.
struct AlignedPair {
    std::vector<std::int64_t> times;
    std::vector<double> a_values;
    std::vector<double> b_values;
    std::size_t dropped_a = 0;
    std::size_t dropped_b = 0;
};

// First differences plus a flag for unevenly spaced stamps. Differences
// over a gap are raw value differences; no per-step scaling is applied.
struct Differenced {
    TimeSeries series;
    bool has_gaps = false;
};

AlignedPair align(const TimeSeries& a, const TimeSeries& b);

Differenced difference(const TimeSeries& s);

// Residuals of an OLS fit of values on stamps.
TimeSeries detrend_linear(const TimeSeries& s);

// Centered unweighted moving average; windows shrink at the boundaries so
// the output has the input's length. window must be odd.
TimeSeries moving_average(const TimeSeries& s, int window = 11);

}  // namespace trendaudit
