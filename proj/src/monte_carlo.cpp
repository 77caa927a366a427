#include "trendaudit/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trendaudit/errors.hpp"
#include "trendaudit/parallel.hpp"
#include "trendaudit/rng.hpp"
#include "trendaudit/stats.hpp"

namespace trendaudit {

void WalkParams::validate() const {
    if (!(drift_min < drift_max) || drift_min <= 0.0 || drift_max <= 0.0) {
        throw_error(ErrorCode::InvalidParams,
                    "walk params: need 0 < drift_min < drift_max");
    }
    if (length < 2) {
        throw_error(ErrorCode::InvalidParams, "walk params: length must be >= 2");
    }
    if (noise_sd < 0.0 || !std::isfinite(noise_sd)) {
        throw_error(ErrorCode::InvalidParams, "walk params: noise_sd must be finite and >= 0");
    }
}

TimeSeries gen_random_walk(const WalkParams& params, std::uint64_t walk_index,
                           std::uint64_t master_seed) {
    params.validate();
    Xoshiro256pp rng = Xoshiro256pp::substream(master_seed, walk_index);
    const double drift = rng.next_uniform(params.drift_min, params.drift_max);

    TimeSeries walk;
    walk.label = "walk#" + std::to_string(walk_index);
    walk.times.resize(params.length);
    walk.values.resize(params.length);
    std::iota(walk.times.begin(), walk.times.end(), std::int64_t{0});
    walk.values[0] = params.x0;
    for (std::size_t t = 1; t < params.length; ++t) {
        const double noise = params.noise_sd == 0.0 ? 0.0 : params.noise_sd * rng.next_normal();
        walk.values[t] = drift + walk.values[t - 1] + noise;
    }
    return walk;
}

double share_above(std::span<const double> values, double threshold) {
    if (values.empty()) return 0.0;
    const auto hits = std::count_if(values.begin(), values.end(),
                                    [&](double v) { return v > threshold; });
    return static_cast<double>(hits) / static_cast<double>(values.size());
}

double mean_of(std::span<const double> values) {
    if (values.empty()) return 0.0;
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc / static_cast<double>(values.size());
}

double max_abs(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

Histogram histogram(std::span<const double> values, int n_bins, bool with_normal_overlay) {
    if (values.empty()) {
        throw_error(ErrorCode::InvalidParams, "histogram: no values");
    }
    if (n_bins < 1) {
        throw_error(ErrorCode::InvalidParams, "histogram: n_bins must be >= 1");
    }
    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    double lo = *min_it;
    double hi = *max_it;
    if (lo == hi) {
        // Degenerate range: one unit-width bin holding everything.
        lo -= 0.5;
        hi += 0.5;
        n_bins = 1;
    }

    Histogram h;
    h.edges.resize(static_cast<std::size_t>(n_bins) + 1);
    const double width = (hi - lo) / n_bins;
    for (int i = 0; i <= n_bins; ++i) h.edges[static_cast<std::size_t>(i)] = lo + width * i;
    h.edges.back() = hi;  // guard against accumulation drift

    h.counts.assign(static_cast<std::size_t>(n_bins), 0);
    for (double v : values) {
        auto bin = static_cast<std::ptrdiff_t>((v - lo) / width);
        bin = std::clamp<std::ptrdiff_t>(bin, 0, n_bins - 1);  // right edge inclusive
        ++h.counts[static_cast<std::size_t>(bin)];
    }

    if (with_normal_overlay) {
        const double n = static_cast<double>(values.size());
        const double mean = mean_of(values);
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        const double sd = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
        if (sd > 0.0) {
            h.overlay.resize(h.counts.size());
            const double scale = n * width / (sd * std::sqrt(2.0 * M_PI));
            for (std::size_t i = 0; i < h.counts.size(); ++i) {
                const double center = 0.5 * (h.edges[i] + h.edges[i + 1]);
                const double zscore = (center - mean) / sd;
                h.overlay[i] = scale * std::exp(-0.5 * zscore * zscore);
            }
        }
    }
    return h;
}

MonteCarloSummary run_monte_carlo(const TimeSeries& target, const McConfig& config) {
    config.params.validate();
    if (config.n_walks < 1) {
        throw_error(ErrorCode::InvalidParams, "run_monte_carlo: n_walks must be >= 1");
    }
    if (target.size() != config.params.length) {
        throw_error(ErrorCode::LengthMismatch,
                    "run_monte_carlo: target length " + std::to_string(target.size()) +
                        " != walk length " + std::to_string(config.params.length));
    }

    const std::vector<double>& tgt = target.values;
    std::vector<double> tgt_diff(tgt.size() - 1);
    for (std::size_t i = 1; i < tgt.size(); ++i) tgt_diff[i - 1] = tgt[i] - tgt[i - 1];

    const std::size_t n = config.n_walks;
    std::vector<double> lev(n), chg(n), lev_rho(n), chg_rho(n);
    std::vector<std::uint8_t> bad(n, 0);

    parallel_for_chunks(n, config.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> wdiff(config.params.length - 1);
        for (std::size_t i = begin; i < end; ++i) {
            const TimeSeries walk = gen_random_walk(config.params, i, config.master_seed);
            for (std::size_t t = 1; t < walk.size(); ++t) {
                wdiff[t - 1] = walk.values[t] - walk.values[t - 1];
            }
            try {
                lev[i] = pearson(walk.values, tgt, CorrMode::levels).r;
                chg[i] = pearson(wdiff, tgt_diff, CorrMode::changes).r;
                const OlsFit fit_lev = ols_simple(walk.values, tgt);
                lev_rho[i] = residual_lag1_corr(fit_lev).rho_hat;
                const OlsFit fit_chg = ols_simple(wdiff, tgt_diff);
                chg_rho[i] = residual_lag1_corr(fit_chg).rho_hat;
            } catch (const Error&) {
                // Degenerate walk (or target interaction): exclude, never abort.
                bad[i] = 1;
            }
        }
    });

    MonteCarloSummary out;
    out.n_walks = n;
    out.master_seed = config.master_seed;
    out.rng_name = Xoshiro256pp::kName;
    out.drift_min = config.params.drift_min;
    out.drift_max = config.params.drift_max;
    out.length = config.params.length;
    out.level_corrs.reserve(n);
    out.change_corrs.reserve(n);
    out.level_resid_rho.reserve(n);
    out.change_resid_rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (bad[i]) {
            ++out.degenerate_excluded;
            continue;
        }
        out.level_corrs.push_back(lev[i]);
        out.change_corrs.push_back(chg[i]);
        out.level_resid_rho.push_back(lev_rho[i]);
        out.change_resid_rho.push_back(chg_rho[i]);
    }
    if (out.level_corrs.empty()) {
        throw_error(ErrorCode::ConstantInput,
                    "run_monte_carlo: every walk was degenerate against this target");
    }

    out.level_hist = histogram(out.level_corrs, config.histogram_bins, true);
    out.change_hist = histogram(out.change_corrs, config.histogram_bins, true);
    out.level_rho_hist = histogram(out.level_resid_rho, config.histogram_bins, true);
    out.change_rho_hist = histogram(out.change_resid_rho, config.histogram_bins, true);
    return out;
}

}  // namespace trendaudit
