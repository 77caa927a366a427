#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trendaudit/series.hpp"

// Random-walk-with-drift null calibration: simulate an ensemble of
// drifting walks, correlate each against a fixed target series on levels
// and on year-to-year changes, and collect the lag-1 autocorrelation of
// the regression residuals for both variants.

namespace trendaudit {

struct WalkParams {
    double drift_min = 0.02;
    double drift_max = 0.2;
    std::size_t length = 0;
    double x0 = 0.0;
    // Standard deviation of the white-noise term. 1.0 is the model; 0
    // exists as a test hook that turns the walk into a pure ramp.
    double noise_sd = 1.0;

    void validate() const;
};

struct Histogram {
    std::vector<double> edges;        // strictly increasing, counts.size() + 1
    std::vector<std::uint64_t> counts;
    // Normal density with the sample mean/sd scaled by n * bin_width,
    // evaluated at bin centers. Empty when not requested or sd == 0.
    std::vector<double> overlay;
};

// Equal-width bins over [min, max]; the last bin includes its right edge.
// All-equal input degenerates to a single unit-width bin holding all
// values. Overlay per Histogram.
Histogram histogram(std::span<const double> values, int n_bins, bool with_normal_overlay);

double share_above(std::span<const double> values, double threshold);
double mean_of(std::span<const double> values);
double max_abs(std::span<const double> values);

struct MonteCarloSummary {
    std::size_t n_walks = 0;
    std::uint64_t master_seed = 0;
    std::string rng_name;
    double drift_min = 0.0;
    double drift_max = 0.0;
    std::size_t length = 0;

    // One entry per non-degenerate walk, ordered by walk index.
    std::vector<double> level_corrs;
    std::vector<double> change_corrs;
    std::vector<double> level_resid_rho;
    std::vector<double> change_resid_rho;
    // Walks whose statistics could not be computed (e.g. zero variance);
    // they are counted here and excluded from the vectors.
    std::size_t degenerate_excluded = 0;

    Histogram level_hist;
    Histogram change_hist;
    Histogram level_rho_hist;
    Histogram change_rho_hist;
};

struct McConfig {
    std::size_t n_walks = 10000;
    WalkParams params;
    std::uint64_t master_seed = 0;
    int histogram_bins = 40;
    // 0 = use thread_budget().
    std::size_t threads = 0;
};

// Walk i reproducibly derives its RNG stream from (master_seed, i); the
// drift is the stream's first uniform draw from [drift_min, drift_max).
TimeSeries gen_random_walk(const WalkParams& params, std::uint64_t walk_index,
                           std::uint64_t master_seed);

// The summary is a pure function of (target, config); the degree of
// parallelism cannot change any output value.
MonteCarloSummary run_monte_carlo(const TimeSeries& target, const McConfig& config);

}  // namespace trendaudit
