#include "trendaudit/series.hpp"

#include <cmath>
#include <utility>

#include "trendaudit/errors.hpp"
#include "trendaudit/kernels.hpp"

namespace trendaudit {

TimeSeries TimeSeries::make(std::vector<std::int64_t> times, std::vector<double> values,
                            std::string label) {
    TimeSeries s{std::move(times), std::move(values), std::move(label)};
    s.validate();
    return s;
}

void TimeSeries::validate() const {
    if (times.empty() || values.empty()) {
        throw_error(ErrorCode::InvalidSeries, "series '" + label + "' is empty");
    }
    if (times.size() != values.size()) {
        throw_error(ErrorCode::InvalidSeries,
                    "series '" + label + "': times and values lengths differ");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] <= times[i - 1]) {
            throw_error(ErrorCode::InvalidSeries,
                        "series '" + label + "': time stamps not strictly increasing at index " +
                            std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw_error(ErrorCode::InvalidSeries,
                        "series '" + label + "': non-finite value at index " + std::to_string(i));
        }
    }
}

AlignedPair align(const TimeSeries& a, const TimeSeries& b) {
    AlignedPair pair;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a.times[i] < b.times[j]) {
            ++i;
        } else if (a.times[i] > b.times[j]) {
            ++j;
        } else {
            pair.times.push_back(a.times[i]);
            pair.a_values.push_back(a.values[i]);
            pair.b_values.push_back(b.values[j]);
            ++i;
            ++j;
        }
    }
    if (pair.times.empty()) {
        throw_error(ErrorCode::EmptyIntersection,
                    "series '" + a.label + "' and '" + b.label + "' share no time stamps");
    }
    pair.dropped_a = a.size() - pair.times.size();
    pair.dropped_b = b.size() - pair.times.size();
    return pair;
}

Differenced difference(const TimeSeries& s) {
    if (s.size() < 2) {
        throw_error(ErrorCode::TooShort, "difference needs at least 2 observations");
    }
    Differenced out;
    out.series.label = s.label.empty() ? std::string("diff") : "diff(" + s.label + ")";
    out.series.times.assign(s.times.begin() + 1, s.times.end());
    out.series.values.resize(s.size() - 1);
    const std::int64_t step = s.times[1] - s.times[0];
    for (std::size_t i = 1; i < s.size(); ++i) {
        out.series.values[i - 1] = s.values[i] - s.values[i - 1];
        if (s.times[i] - s.times[i - 1] != step) out.has_gaps = true;
    }
    return out;
}

TimeSeries detrend_linear(const TimeSeries& s) {
    if (s.size() < 3) {
        throw_error(ErrorCode::TooShort, "detrend_linear needs at least 3 observations");
    }
    const std::size_t n = s.size();
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(s.times[i]);

    const double mean_t = kernels::sum(t) / static_cast<double>(n);
    const double mean_v = kernels::sum(s.values) / static_cast<double>(n);
    const auto m = kernels::comoments(t, s.values, mean_t, mean_v);
    if (m.sxx == 0.0) {
        throw_error(ErrorCode::DegenerateTime, "detrend_linear: all time stamps equal");
    }
    const double slope = m.sxy / m.sxx;
    const double intercept = mean_v - slope * mean_t;

    TimeSeries out;
    out.label = s.label.empty() ? std::string("detrended") : "detrend(" + s.label + ")";
    out.times = s.times;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = s.values[i] - (intercept + slope * t[i]);
    }
    return out;
}

TimeSeries moving_average(const TimeSeries& s, int window) {
    if (window < 1 || window % 2 == 0) {
        throw_error(ErrorCode::InvalidParams, "moving_average window must be odd and positive");
    }
    const std::size_t n = s.size();
    const std::size_t half = static_cast<std::size_t>(window / 2);

    TimeSeries out;
    out.label = s.label.empty() ? std::string("smoothed") : "ma(" + s.label + ")";
    out.times = s.times;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(n - 1, i + half);
        double acc = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) acc += s.values[k];
        out.values[i] = acc / static_cast<double>(hi - lo + 1);
    }
    return out;
}

}  // namespace trendaudit
