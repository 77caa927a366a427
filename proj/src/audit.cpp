#include "trendaudit/audit.hpp"

#include <cstdio>
#include <string>

#include "trendaudit/errors.hpp"
#include "trendaudit/rng.hpp"
#include "trendaudit/version.hpp"

namespace trendaudit {

namespace {

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::vector<std::string> build_rationale(const AuditReport& r, double alpha) {
    std::vector<std::string> lines;
    const auto adf_phrase = [](const AdfResult& a) {
        return std::string(a.reject_at_5pct ? "rejects" : "fails to reject") +
               " the unit-root null (stat " + fmt(a.statistic, "%.3f") + " vs 5% crit " +
               fmt(a.crit_5pct, "%.3f") + ")";
    };
    lines.push_back("ADF levels, a: " + adf_phrase(r.adf_a_level));
    lines.push_back("ADF levels, b: " + adf_phrase(r.adf_b_level));
    lines.push_back("level correlation r = " + fmt(r.corr_levels.r, "%.4f") + " (p = " +
                    fmt(r.corr_levels.p_two_sided, "%.4g") + ") is " +
                    (r.corr_levels.p_two_sided < alpha ? "significant" : "not significant") +
                    " at alpha = " + fmt(alpha, "%g"));
    lines.push_back("change correlation r = " + fmt(r.corr_changes.r, "%.4f") + " (p = " +
                    fmt(r.corr_changes.p_two_sided, "%.4g") + ") is " +
                    (r.corr_changes.p_two_sided < alpha ? "significant" : "not significant") +
                    " at alpha = " + fmt(alpha, "%g"));
    switch (r.verdict.category) {
        case VerdictCategory::SPURIOUS_RISK:
            lines.push_back(
                "both level series look non-stationary and the significant level "
                "correlation vanishes in changes: classic spurious-correlation pattern");
            break;
        case VerdictCategory::CHANGES_CONSISTENT:
            lines.push_back(
                "period-to-period changes co-move significantly; the relationship "
                "survives the trend-removing transform");
            break;
        case VerdictCategory::LEVELS_ONLY_STATIONARY:
            lines.push_back(
                "both level series reject the unit-root null, so the level "
                "correlation is interpretable on its own");
            break;
        case VerdictCategory::INCONCLUSIVE:
            lines.push_back(
                "the ADF verdicts and correlation significances fit no clear "
                "pattern; inspect the raw statistics");
            break;
    }
    return lines;
}

}  // namespace

AuditReport audit(const TimeSeries& a, const TimeSeries& b, const AuditConfig& config) {
    a.validate();
    b.validate();
    if (config.alpha <= 0.0 || config.alpha >= 1.0) {
        throw_error(ErrorCode::InvalidParams, "audit: alpha must be in (0,1)");
    }

    const AlignedPair pair = align(a, b);
    if (pair.times.size() < config.min_overlap) {
        throw_error(ErrorCode::OverlapTooShort,
                    "audit: aligned overlap has " + std::to_string(pair.times.size()) +
                        " observations; configured floor is " +
                        std::to_string(config.min_overlap));
    }

    const TimeSeries aligned_a = TimeSeries::make(pair.times, pair.a_values, a.label);
    const TimeSeries aligned_b = TimeSeries::make(pair.times, pair.b_values, b.label);

    AuditReport report;
    report.config = config;
    report.rng_name = Xoshiro256pp::kName;
    report.tool_version = kToolVersion;
    report.input_a = {a.label, a.times.front(), a.times.back(), a.size(), pair.dropped_a};
    report.input_b = {b.label, b.times.front(), b.times.back(), b.size(), pair.dropped_b};
    report.n_overlap = pair.times.size();

    const Differenced diff_a = difference(aligned_a);
    const Differenced diff_b = difference(aligned_b);
    report.diff_has_gaps = diff_a.has_gaps || diff_b.has_gaps;

    report.adf_a_level = adf_test(aligned_a, config.adf_lags, config.adf_det);
    report.adf_b_level = adf_test(aligned_b, config.adf_lags, config.adf_det);
    report.adf_a_diff = adf_test(diff_a.series, config.adf_lags, config.adf_det);
    report.adf_b_diff = adf_test(diff_b.series, config.adf_lags, config.adf_det);

    report.corr_levels = pearson(aligned_a.values, aligned_b.values, CorrMode::levels);
    report.corr_changes =
        pearson(diff_a.series.values, diff_b.series.values, CorrMode::changes);

    const OlsFit fit = ols_simple(aligned_a.values, aligned_b.values);
    report.ols_levels = {fit.beta0, fit.beta1, fit.se_beta1, fit.r_squared, fit.n};
    report.resid_diag = residual_lag1_corr(fit);

    if (config.mc_walks > 0) {
        McConfig mc_config;
        mc_config.n_walks = config.mc_walks;
        mc_config.master_seed = config.master_seed;
        mc_config.histogram_bins = config.histogram_bins;
        mc_config.threads = config.threads;
        mc_config.params.drift_min = config.drift_min;
        mc_config.params.drift_max = config.drift_max;
        mc_config.params.length = aligned_b.size();
        report.mc_full = run_monte_carlo(aligned_b, mc_config);
        report.mc = digest_from_summary(*report.mc_full);
    }

    report.verdict.category =
        derive_verdict(report.adf_a_level.reject_at_5pct, report.adf_b_level.reject_at_5pct,
                       report.corr_levels.p_two_sided, report.corr_changes.p_two_sided,
                       config.alpha);
    report.verdict.rationale = build_rationale(report, config.alpha);
    return report;
}

}  // namespace trendaudit
