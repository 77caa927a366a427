#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "trendaudit/errors.hpp"
#include "trendaudit/rng.hpp"
#include "trendaudit/series.hpp"

using namespace trendaudit;

namespace {

TimeSeries series_over(std::int64_t t0, std::int64_t t1, double v = 1.0) {
    std::vector<std::int64_t> times;
    std::vector<double> values;
    for (std::int64_t t = t0; t <= t1; ++t) {
        times.push_back(t);
        values.push_back(v + 0.01 * static_cast<double>(t - t0));
    }
    return TimeSeries::make(std::move(times), std::move(values));
}

TimeSeries random_series(std::uint64_t seed, std::size_t n) {
    Xoshiro256pp rng(seed);
    std::vector<std::int64_t> times(n);
    std::iota(times.begin(), times.end(), std::int64_t{1900});
    std::vector<double> values(n);
    for (auto& v : values) v = rng.next_normal();
    return TimeSeries::make(std::move(times), std::move(values));
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("invariants are enforced at construction") {
    CHECK_THROWS_AS(TimeSeries::make({}, {}), Error);
    CHECK_THROWS_AS(TimeSeries::make({1, 1}, {0.0, 1.0}), Error);
    CHECK_THROWS_AS(TimeSeries::make({2, 1}, {0.0, 1.0}), Error);
    CHECK_THROWS_AS(TimeSeries::make({1, 2}, {0.0}), Error);
    CHECK_THROWS_AS(TimeSeries::make({1}, {std::nan("")}), Error);
    CHECK_NOTHROW(TimeSeries::make({1}, {0.5}));
}

TEST_CASE("align intersects by time stamp") {
    const auto a = series_over(1900, 2000);
    const auto b = series_over(1950, 2000);
    const AlignedPair pair = align(a, b);
    CHECK(pair.times.size() == 51);
    CHECK(pair.times.front() == 1950);
    CHECK(pair.times.back() == 2000);
    CHECK(pair.dropped_a == 50);
    CHECK(pair.dropped_b == 0);
    CHECK(pair.a_values.front() == doctest::Approx(1.0 + 0.01 * 50));
    CHECK(pair.b_values.front() == doctest::Approx(1.0));
}

TEST_CASE("align of identical ranges drops nothing") {
    const auto a = series_over(1900, 1950);
    const auto b = series_over(1900, 1950, 3.0);
    const AlignedPair pair = align(a, b);
    CHECK(pair.dropped_a == 0);
    CHECK(pair.dropped_b == 0);
    CHECK(pair.times.size() == a.size());
}

TEST_CASE("align with disjoint stamps fails") {
    const auto a = TimeSeries::make({1, 3, 5}, {1, 2, 3});
    const auto b = TimeSeries::make({2, 4, 6}, {1, 2, 3});
    CHECK_THROWS_AS(align(a, b), Error);
}

TEST_CASE("align is symmetric in the time stamps") {
    const auto a = TimeSeries::make({1, 2, 4, 7, 9, 12}, {1, 2, 3, 4, 5, 6});
    const auto b = TimeSeries::make({2, 3, 4, 9, 10}, {1, 2, 3, 4, 5});
    CHECK(align(a, b).times == align(b, a).times);
}

TEST_CASE("difference basics") {
    const auto constant = TimeSeries::make({1, 2, 3}, {5, 5, 5});
    CHECK(difference(constant).series.values == std::vector<double>{0, 0});

    const auto s = TimeSeries::make({1, 2, 3}, {1, 3, 6});
    const Differenced d = difference(s);
    CHECK(d.series.values == std::vector<double>{2, 3});
    CHECK(d.series.times == std::vector<std::int64_t>{2, 3});
    CHECK_FALSE(d.has_gaps);

    CHECK_THROWS_AS(difference(TimeSeries::make({1}, {1.0})), Error);
}

TEST_CASE("difference of a drift ramp is the drift") {
    // x_t = d + x_{t-1} with d = 0.1 and no noise
    std::vector<std::int64_t> times(60);
    std::iota(times.begin(), times.end(), std::int64_t{0});
    std::vector<double> values(60);
    values[0] = 0.0;
    for (std::size_t t = 1; t < 60; ++t) values[t] = 0.1 + values[t - 1];
    const auto ramp = TimeSeries::make(std::move(times), std::move(values));
    for (double v : difference(ramp).series.values) CHECK(v == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("gap flag marks uneven spacing only") {
    const auto gappy = TimeSeries::make({1, 2, 4}, {1, 2, 3});
    CHECK(difference(gappy).has_gaps);
    const auto decades = TimeSeries::make({1900, 1910, 1920}, {1, 2, 3});
    CHECK_FALSE(difference(decades).has_gaps);
}

TEST_CASE("difference then anchored cumulative sum reconstructs the series") {
    const auto s = random_series(31, 80);
    const Differenced d = difference(s);
    double acc = s.values.front();
    for (std::size_t i = 0; i < d.series.size(); ++i) {
        acc += d.series.values[i];
        CHECK(acc == doctest::Approx(s.values[i + 1]).epsilon(1e-9));
    }
}

TEST_CASE("detrend removes an exact linear trend") {
    std::vector<std::int64_t> times{0, 1, 2, 3, 4};
    std::vector<double> values;
    for (auto t : times) values.push_back(2.0 * static_cast<double>(t) + 1.0);
    const auto resid = detrend_linear(TimeSeries::make(times, values));
    for (double r : resid.values) CHECK(std::fabs(r) < 1e-9);
}

TEST_CASE("detrend hand-computed residuals") {
    const auto resid = detrend_linear(TimeSeries::make({0, 1, 2}, {0, 2, 1}));
    CHECK(resid.values[0] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(resid.values[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(resid.values[2] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("detrend is idempotent and orthogonal to time") {
    const auto s = random_series(77, 64);
    const auto once = detrend_linear(s);
    const auto twice = detrend_linear(once);
    double sum = 0.0, dot_t = 0.0, mean_t = 0.0;
    for (auto t : once.times) mean_t += static_cast<double>(t);
    mean_t /= static_cast<double>(once.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
        CHECK(twice.values[i] == doctest::Approx(once.values[i]).epsilon(1e-9));
        sum += once.values[i];
        dot_t += once.values[i] * (static_cast<double>(once.times[i]) - mean_t);
    }
    CHECK(std::fabs(sum) < 1e-9);
    CHECK(std::fabs(dot_t) < 1e-9);
    CHECK_THROWS_AS(detrend_linear(TimeSeries::make({1, 2}, {1, 2})), Error);
}

TEST_CASE("moving average window 1 is the identity") {
    const auto s = random_series(3, 20);
    CHECK(moving_average(s, 1).values == s.values);
}

TEST_CASE("moving average of a constant is the constant") {
    const auto s = TimeSeries::make({1, 2, 3, 4, 5}, {2, 2, 2, 2, 2});
    for (double v : moving_average(s, 11).values) CHECK(v == doctest::Approx(2.0));
}

TEST_CASE("moving average truncates at the boundaries") {
    const auto s = TimeSeries::make({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5});
    const auto smoothed = moving_average(s, 3);
    const std::vector<double> expected{1.5, 2.0, 3.0, 4.0, 4.5};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(smoothed.values[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    CHECK(smoothed.size() == s.size());
}

TEST_CASE("moving average stays inside the input range") {
    const auto s = random_series(8, 101);
    const double lo = *std::min_element(s.values.begin(), s.values.end());
    const double hi = *std::max_element(s.values.begin(), s.values.end());
    for (int window : {3, 5, 11}) {
        for (double v : moving_average(s, window).values) {
            CHECK(v >= lo);
            CHECK(v <= hi);
        }
    }
    CHECK_THROWS_AS(moving_average(s, 4), Error);
    CHECK_THROWS_AS(moving_average(s, -1), Error);
}

TEST_SUITE_END();
