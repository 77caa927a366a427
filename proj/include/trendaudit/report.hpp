#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trendaudit/adf.hpp"
#include "trendaudit/monte_carlo.hpp"
#include "trendaudit/stats.hpp"

// Audit report plus its serializations. The JSON form is key-sorted and
// floats are written with 12 significant digits, so identical inputs and
// seeds give byte-identical files; the verdict can be re-derived from the
// serialized statistics alone.

namespace trendaudit {

enum class VerdictCategory {
    SPURIOUS_RISK,
    CHANGES_CONSISTENT,
    LEVELS_ONLY_STATIONARY,
    INCONCLUSIVE,
};

const char* verdict_name(VerdictCategory v);
VerdictCategory verdict_from_name(const std::string& name);

struct Verdict {
    VerdictCategory category = VerdictCategory::INCONCLUSIVE;
    std::vector<std::string> rationale;
};

// The verdict is a pure function of these five inputs.
VerdictCategory derive_verdict(bool a_level_rejects_adf, bool b_level_rejects_adf,
                               double p_levels, double p_changes, double alpha);

struct InputSummary {
    std::string label;
    std::int64_t time_min = 0;
    std::int64_t time_max = 0;
    std::size_t n_raw = 0;
    std::size_t dropped_by_alignment = 0;
};

struct RegressionSummary {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double se_beta1 = 0.0;
    double r_squared = 0.0;
    std::size_t n = 0;
};

struct McDigest {
    std::size_t n_walks = 0;
    std::uint64_t master_seed = 0;
    std::string rng_name;
    std::size_t degenerate_excluded = 0;
    double level_corr_mean = 0.0;
    double level_corr_share_gt_030 = 0.0;
    double level_corr_share_gt_075 = 0.0;
    double change_corr_mean = 0.0;
    double change_corr_max_abs = 0.0;
    double level_resid_rho_mean = 0.0;
    double change_resid_rho_mean = 0.0;
    Histogram level_hist;
    Histogram change_hist;
    Histogram level_rho_hist;
    Histogram change_rho_hist;
};

McDigest digest_from_summary(const MonteCarloSummary& summary);

struct AuditConfig {
    double alpha = 0.05;
    std::size_t min_overlap = 20;
    int adf_lags = 1;
    Deterministic adf_det = Deterministic::constant;
    std::size_t mc_walks = 0;  // 0 = skip the Monte Carlo stage
    std::uint64_t master_seed = 0;
    int histogram_bins = 40;
    double drift_min = 0.02;
    double drift_max = 0.2;
    std::size_t threads = 0;  // 0 = auto; never echoed into the report
};

struct AuditReport {
    InputSummary input_a;
    InputSummary input_b;
    std::size_t n_overlap = 0;
    bool diff_has_gaps = false;

    AdfResult adf_a_level;
    AdfResult adf_b_level;
    AdfResult adf_a_diff;
    AdfResult adf_b_diff;

    CorrelationResult corr_levels;
    CorrelationResult corr_changes;

    RegressionSummary ols_levels;
    Ar1Diagnostics resid_diag;

    std::optional<McDigest> mc;
    Verdict verdict;

    AuditConfig config;
    std::string rng_name;
    std::string tool_version;

    // Full Monte Carlo vectors; kept for the csv-digest output, never
    // serialized into the JSON report.
    std::optional<MonteCarloSummary> mc_full;
};

enum class ReportFormat { json, text, csv_digest };

ReportFormat report_format_from_name(const std::string& name);

std::string report_to_json(const AuditReport& report);
AuditReport report_from_json(const std::string& json_text);
std::string report_to_text(const AuditReport& report);
std::string report_to_csv_digest(const AuditReport& report);

// destination "-" writes to stdout.
void write_report(const AuditReport& report, ReportFormat format,
                  const std::string& destination);

// Plot-ready exports for a standalone simulation run.
std::string mc_summary_to_json(const MonteCarloSummary& summary);
std::string mc_summary_to_csv(const MonteCarloSummary& summary);
std::string mc_summary_to_text(const MonteCarloSummary& summary);

}  // namespace trendaudit
