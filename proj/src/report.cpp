#include "trendaudit/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include <json.hpp>

#include "trendaudit/errors.hpp"

namespace trendaudit {

namespace {

// ---------------------------------------------------------------------
// Minimal JSON emitter with fixed key order and 12-significant-digit
// floats. nlohmann/json handles parsing; emission is hand-rolled so the
// byte layout is fully pinned.
// ---------------------------------------------------------------------

std::string fmt_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class JsonOut {
  public:
    void begin_obj() {
        comma();
        out_ += '{';
        fresh_ = true;
    }
    void end_obj() {
        out_ += '}';
        fresh_ = false;
    }
    void begin_arr() {
        comma();
        out_ += '[';
        fresh_ = true;
    }
    void end_arr() {
        out_ += ']';
        fresh_ = false;
    }
    void key(const char* name) {
        comma();
        out_ += '"';
        out_ += name;
        out_ += "\":";
        fresh_ = true;
    }
    void value(double v) {
        comma();
        out_ += fmt_double(v);
        fresh_ = false;
    }
    void value(std::uint64_t v) {
        comma();
        out_ += std::to_string(v);
        fresh_ = false;
    }
    void value(std::int64_t v) {
        comma();
        out_ += std::to_string(v);
        fresh_ = false;
    }
    void value(bool v) {
        comma();
        out_ += v ? "true" : "false";
        fresh_ = false;
    }
    void value(const std::string& v) {
        comma();
        out_ += '"';
        out_ += escape_json(v);
        out_ += '"';
        fresh_ = false;
    }
    void null() {
        comma();
        out_ += "null";
        fresh_ = false;
    }
    const std::string& str() const { return out_; }

  private:
    void comma() {
        if (!fresh_ && !out_.empty()) {
            const char last = out_.back();
            if (last != '{' && last != '[' && last != ':') out_ += ',';
        }
        fresh_ = false;
    }
    std::string out_;
    bool fresh_ = true;
};

void emit_adf(JsonOut& j, const AdfResult& a) {
    j.begin_obj();
    j.key("approx_p");
    if (a.approx_p) {
        j.value(*a.approx_p);
    } else {
        j.null();
    }
    j.key("crit_10pct");
    j.value(a.crit_10pct);
    j.key("crit_1pct");
    j.value(a.crit_1pct);
    j.key("crit_5pct");
    j.value(a.crit_5pct);
    j.key("deterministic");
    j.value(std::string(deterministic_name(a.deterministic)));
    j.key("lags");
    j.value(static_cast<std::int64_t>(a.lags));
    j.key("n_effective");
    j.value(static_cast<std::uint64_t>(a.n_effective));
    j.key("reject_at_5pct");
    j.value(a.reject_at_5pct);
    j.key("statistic");
    j.value(a.statistic);
    j.end_obj();
}

void emit_corr(JsonOut& j, const CorrelationResult& c) {
    j.begin_obj();
    j.key("mode");
    j.value(std::string(c.mode == CorrMode::levels ? "levels" : "changes"));
    j.key("n");
    j.value(static_cast<std::uint64_t>(c.n));
    j.key("p_two_sided");
    j.value(c.p_two_sided);
    j.key("r");
    j.value(c.r);
    j.key("t_stat");
    j.value(c.t_stat);
    j.end_obj();
}

void emit_input(JsonOut& j, const InputSummary& in) {
    j.begin_obj();
    j.key("dropped_by_alignment");
    j.value(static_cast<std::uint64_t>(in.dropped_by_alignment));
    j.key("label");
    j.value(in.label);
    j.key("n_raw");
    j.value(static_cast<std::uint64_t>(in.n_raw));
    j.key("time_max");
    j.value(in.time_max);
    j.key("time_min");
    j.value(in.time_min);
    j.end_obj();
}

void emit_hist(JsonOut& j, const Histogram& h) {
    j.begin_obj();
    j.key("counts");
    j.begin_arr();
    for (std::uint64_t c : h.counts) j.value(c);
    j.end_arr();
    j.key("edges");
    j.begin_arr();
    for (double e : h.edges) j.value(e);
    j.end_arr();
    j.key("overlay");
    j.begin_arr();
    for (double o : h.overlay) j.value(o);
    j.end_arr();
    j.end_obj();
}

Histogram parse_hist(const nlohmann::json& node) {
    Histogram h;
    for (const auto& c : node.at("counts")) h.counts.push_back(c.get<std::uint64_t>());
    for (const auto& e : node.at("edges")) h.edges.push_back(e.get<double>());
    for (const auto& o : node.at("overlay")) h.overlay.push_back(o.get<double>());
    return h;
}

AdfResult parse_adf(const nlohmann::json& node) {
    AdfResult a;
    if (node.at("approx_p").is_null()) {
        a.approx_p.reset();
    } else {
        a.approx_p = node.at("approx_p").get<double>();
    }
    a.crit_10pct = node.at("crit_10pct").get<double>();
    a.crit_1pct = node.at("crit_1pct").get<double>();
    a.crit_5pct = node.at("crit_5pct").get<double>();
    a.deterministic = deterministic_from_name(node.at("deterministic").get<std::string>());
    a.lags = node.at("lags").get<int>();
    a.n_effective = node.at("n_effective").get<std::size_t>();
    a.reject_at_5pct = node.at("reject_at_5pct").get<bool>();
    a.statistic = node.at("statistic").get<double>();
    return a;
}

CorrelationResult parse_corr(const nlohmann::json& node) {
    CorrelationResult c;
    c.mode = node.at("mode").get<std::string>() == "levels" ? CorrMode::levels
                                                            : CorrMode::changes;
    c.n = node.at("n").get<std::size_t>();
    c.p_two_sided = node.at("p_two_sided").get<double>();
    c.r = node.at("r").get<double>();
    c.t_stat = node.at("t_stat").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                           : node.at("t_stat").get<double>();
    return c;
}

InputSummary parse_input(const nlohmann::json& node) {
    InputSummary in;
    in.dropped_by_alignment = node.at("dropped_by_alignment").get<std::size_t>();
    in.label = node.at("label").get<std::string>();
    in.n_raw = node.at("n_raw").get<std::size_t>();
    in.time_max = node.at("time_max").get<std::int64_t>();
    in.time_min = node.at("time_min").get<std::int64_t>();
    return in;
}

}  // namespace

const char* verdict_name(VerdictCategory v) {
    switch (v) {
        case VerdictCategory::SPURIOUS_RISK: return "SPURIOUS_RISK";
        case VerdictCategory::CHANGES_CONSISTENT: return "CHANGES_CONSISTENT";
        case VerdictCategory::LEVELS_ONLY_STATIONARY: return "LEVELS_ONLY_STATIONARY";
        case VerdictCategory::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

VerdictCategory verdict_from_name(const std::string& name) {
    if (name == "SPURIOUS_RISK") return VerdictCategory::SPURIOUS_RISK;
    if (name == "CHANGES_CONSISTENT") return VerdictCategory::CHANGES_CONSISTENT;
    if (name == "LEVELS_ONLY_STATIONARY") return VerdictCategory::LEVELS_ONLY_STATIONARY;
    if (name == "INCONCLUSIVE") return VerdictCategory::INCONCLUSIVE;
    throw_error(ErrorCode::InvalidParams, "unknown verdict category: " + name);
}

VerdictCategory derive_verdict(bool a_level_rejects_adf, bool b_level_rejects_adf,
                               double p_levels, double p_changes, double alpha) {
    const bool both_fail = !a_level_rejects_adf && !b_level_rejects_adf;
    const bool levels_significant = p_levels < alpha;
    const bool changes_significant = p_changes < alpha;
    if (both_fail && levels_significant && !changes_significant) {
        return VerdictCategory::SPURIOUS_RISK;
    }
    if (changes_significant) {
        return VerdictCategory::CHANGES_CONSISTENT;
    }
    if (a_level_rejects_adf && b_level_rejects_adf) {
        return VerdictCategory::LEVELS_ONLY_STATIONARY;
    }
    return VerdictCategory::INCONCLUSIVE;
}

McDigest digest_from_summary(const MonteCarloSummary& summary) {
    McDigest d;
    d.n_walks = summary.n_walks;
    d.master_seed = summary.master_seed;
    d.rng_name = summary.rng_name;
    d.degenerate_excluded = summary.degenerate_excluded;
    d.level_corr_mean = mean_of(summary.level_corrs);
    d.level_corr_share_gt_030 = share_above(summary.level_corrs, 0.30);
    d.level_corr_share_gt_075 = share_above(summary.level_corrs, 0.75);
    d.change_corr_mean = mean_of(summary.change_corrs);
    d.change_corr_max_abs = max_abs(summary.change_corrs);
    d.level_resid_rho_mean = mean_of(summary.level_resid_rho);
    d.change_resid_rho_mean = mean_of(summary.change_resid_rho);
    d.level_hist = summary.level_hist;
    d.change_hist = summary.change_hist;
    d.level_rho_hist = summary.level_rho_hist;
    d.change_rho_hist = summary.change_rho_hist;
    return d;
}

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "text") return ReportFormat::text;
    if (name == "csv-digest" || name == "csv_digest") return ReportFormat::csv_digest;
    throw_error(ErrorCode::InvalidParams, "unknown report format: " + name);
}

std::string report_to_json(const AuditReport& report) {
    JsonOut j;
    j.begin_obj();

    j.key("adf");
    j.begin_obj();
    j.key("a_diff");
    emit_adf(j, report.adf_a_diff);
    j.key("a_level");
    emit_adf(j, report.adf_a_level);
    j.key("b_diff");
    emit_adf(j, report.adf_b_diff);
    j.key("b_level");
    emit_adf(j, report.adf_b_level);
    j.end_obj();

    j.key("config");
    j.begin_obj();
    j.key("adf_deterministic");
    j.value(std::string(deterministic_name(report.config.adf_det)));
    j.key("adf_lags");
    j.value(static_cast<std::int64_t>(report.config.adf_lags));
    j.key("alpha");
    j.value(report.config.alpha);
    j.key("drift_max");
    j.value(report.config.drift_max);
    j.key("drift_min");
    j.value(report.config.drift_min);
    j.key("histogram_bins");
    j.value(static_cast<std::int64_t>(report.config.histogram_bins));
    j.key("master_seed");
    j.value(report.config.master_seed);
    j.key("mc_walks");
    j.value(static_cast<std::uint64_t>(report.config.mc_walks));
    j.key("min_overlap");
    j.value(static_cast<std::uint64_t>(report.config.min_overlap));
    j.key("rng_name");
    j.value(report.rng_name);
    j.key("tool_version");
    j.value(report.tool_version);
    j.end_obj();

    j.key("correlations");
    j.begin_obj();
    j.key("changes");
    emit_corr(j, report.corr_changes);
    j.key("levels");
    emit_corr(j, report.corr_levels);
    j.end_obj();

    j.key("inputs");
    j.begin_obj();
    j.key("a");
    emit_input(j, report.input_a);
    j.key("b");
    emit_input(j, report.input_b);
    j.key("diff_has_gaps");
    j.value(report.diff_has_gaps);
    j.key("n_overlap");
    j.value(static_cast<std::uint64_t>(report.n_overlap));
    j.end_obj();

    j.key("monte_carlo");
    if (!report.mc) {
        j.null();
    } else {
        const McDigest& d = *report.mc;
        j.begin_obj();
        j.key("change_corr_max_abs");
        j.value(d.change_corr_max_abs);
        j.key("change_corr_mean");
        j.value(d.change_corr_mean);
        j.key("change_hist");
        emit_hist(j, d.change_hist);
        j.key("change_resid_rho_hist");
        emit_hist(j, d.change_rho_hist);
        j.key("change_resid_rho_mean");
        j.value(d.change_resid_rho_mean);
        j.key("degenerate_excluded");
        j.value(static_cast<std::uint64_t>(d.degenerate_excluded));
        j.key("level_corr_mean");
        j.value(d.level_corr_mean);
        j.key("level_corr_share_gt_030");
        j.value(d.level_corr_share_gt_030);
        j.key("level_corr_share_gt_075");
        j.value(d.level_corr_share_gt_075);
        j.key("level_hist");
        emit_hist(j, d.level_hist);
        j.key("level_resid_rho_hist");
        emit_hist(j, d.level_rho_hist);
        j.key("level_resid_rho_mean");
        j.value(d.level_resid_rho_mean);
        j.key("master_seed");
        j.value(d.master_seed);
        j.key("n_walks");
        j.value(static_cast<std::uint64_t>(d.n_walks));
        j.key("rng_name");
        j.value(d.rng_name);
        j.end_obj();
    }

    j.key("regression");
    j.begin_obj();
    j.key("levels");
    j.begin_obj();
    j.key("beta0");
    j.value(report.ols_levels.beta0);
    j.key("beta1");
    j.value(report.ols_levels.beta1);
    j.key("n");
    j.value(static_cast<std::uint64_t>(report.ols_levels.n));
    j.key("r_squared");
    j.value(report.ols_levels.r_squared);
    j.key("se_beta1");
    j.value(report.ols_levels.se_beta1);
    j.end_obj();
    j.key("resid_lag1");
    j.begin_obj();
    j.key("n_pairs");
    j.value(static_cast<std::uint64_t>(report.resid_diag.n_pairs));
    j.key("rho_hat");
    j.value(report.resid_diag.rho_hat);
    j.end_obj();
    j.end_obj();

    j.key("verdict");
    j.begin_obj();
    j.key("category");
    j.value(std::string(verdict_name(report.verdict.category)));
    j.key("rationale");
    j.begin_arr();
    for (const auto& line : report.verdict.rationale) j.value(line);
    j.end_arr();
    j.end_obj();

    j.end_obj();
    return j.str() + "\n";
}

AuditReport report_from_json(const std::string& json_text) {
    nlohmann::json root = nlohmann::json::parse(json_text);
    AuditReport r;

    const auto& adf = root.at("adf");
    r.adf_a_diff = parse_adf(adf.at("a_diff"));
    r.adf_a_level = parse_adf(adf.at("a_level"));
    r.adf_b_diff = parse_adf(adf.at("b_diff"));
    r.adf_b_level = parse_adf(adf.at("b_level"));

    const auto& cfg = root.at("config");
    r.config.adf_det = deterministic_from_name(cfg.at("adf_deterministic").get<std::string>());
    r.config.adf_lags = cfg.at("adf_lags").get<int>();
    r.config.alpha = cfg.at("alpha").get<double>();
    r.config.drift_max = cfg.at("drift_max").get<double>();
    r.config.drift_min = cfg.at("drift_min").get<double>();
    r.config.histogram_bins = cfg.at("histogram_bins").get<int>();
    r.config.master_seed = cfg.at("master_seed").get<std::uint64_t>();
    r.config.mc_walks = cfg.at("mc_walks").get<std::size_t>();
    r.config.min_overlap = cfg.at("min_overlap").get<std::size_t>();
    r.rng_name = cfg.at("rng_name").get<std::string>();
    r.tool_version = cfg.at("tool_version").get<std::string>();

    const auto& corr = root.at("correlations");
    r.corr_changes = parse_corr(corr.at("changes"));
    r.corr_levels = parse_corr(corr.at("levels"));

    const auto& inputs = root.at("inputs");
    r.input_a = parse_input(inputs.at("a"));
    r.input_b = parse_input(inputs.at("b"));
    r.diff_has_gaps = inputs.at("diff_has_gaps").get<bool>();
    r.n_overlap = inputs.at("n_overlap").get<std::size_t>();

    const auto& mc = root.at("monte_carlo");
    if (!mc.is_null()) {
        McDigest d;
        d.change_corr_max_abs = mc.at("change_corr_max_abs").get<double>();
        d.change_corr_mean = mc.at("change_corr_mean").get<double>();
        d.change_hist = parse_hist(mc.at("change_hist"));
        d.change_rho_hist = parse_hist(mc.at("change_resid_rho_hist"));
        d.change_resid_rho_mean = mc.at("change_resid_rho_mean").get<double>();
        d.degenerate_excluded = mc.at("degenerate_excluded").get<std::size_t>();
        d.level_corr_mean = mc.at("level_corr_mean").get<double>();
        d.level_corr_share_gt_030 = mc.at("level_corr_share_gt_030").get<double>();
        d.level_corr_share_gt_075 = mc.at("level_corr_share_gt_075").get<double>();
        d.level_hist = parse_hist(mc.at("level_hist"));
        d.level_rho_hist = parse_hist(mc.at("level_resid_rho_hist"));
        d.level_resid_rho_mean = mc.at("level_resid_rho_mean").get<double>();
        d.master_seed = mc.at("master_seed").get<std::uint64_t>();
        d.n_walks = mc.at("n_walks").get<std::size_t>();
        d.rng_name = mc.at("rng_name").get<std::string>();
        r.mc = std::move(d);
    }

    const auto& reg = root.at("regression");
    r.ols_levels.beta0 = reg.at("levels").at("beta0").get<double>();
    r.ols_levels.beta1 = reg.at("levels").at("beta1").get<double>();
    r.ols_levels.n = reg.at("levels").at("n").get<std::size_t>();
    r.ols_levels.r_squared = reg.at("levels").at("r_squared").get<double>();
    r.ols_levels.se_beta1 = reg.at("levels").at("se_beta1").get<double>();
    r.resid_diag.n_pairs = reg.at("resid_lag1").at("n_pairs").get<std::size_t>();
    r.resid_diag.rho_hat = reg.at("resid_lag1").at("rho_hat").get<double>();

    const auto& verdict = root.at("verdict");
    r.verdict.category = verdict_from_name(verdict.at("category").get<std::string>());
    for (const auto& line : verdict.at("rationale")) {
        r.verdict.rationale.push_back(line.get<std::string>());
    }
    return r;
}

namespace {

std::string fmt_num(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void text_adf_line(std::string& out, const char* tag, const AdfResult& a) {
    out += "  ";
    out += tag;
    out += ": stat ";
    out += fmt_num(a.statistic, "%.4f");
    out += "  5% crit ";
    out += fmt_num(a.crit_5pct, "%.4f");
    out += a.reject_at_5pct ? "  -> reject (stationary)" : "  -> fail to reject (unit root plausible)";
    if (a.approx_p) {
        out += "  [p~";
        out += fmt_num(*a.approx_p, "%.3f");
        out += "]";
    }
    out += "\n";
}

}  // namespace

std::string report_to_text(const AuditReport& report) {
    std::string out;
    out += "trendaudit report (v" + report.tool_version + ")\n";
    out += "inputs:\n";
    for (const InputSummary* in : {&report.input_a, &report.input_b}) {
        out += "  " + (in == &report.input_a ? std::string("a") : std::string("b")) + ": " +
               in->label + "  [" + std::to_string(in->time_min) + ".." +
               std::to_string(in->time_max) + "]  n=" + std::to_string(in->n_raw) +
               "  dropped by alignment: " + std::to_string(in->dropped_by_alignment) + "\n";
    }
    out += "  overlap: " + std::to_string(report.n_overlap) + " observations\n";
    if (report.diff_has_gaps) {
        out += "  note: aligned stamps are unevenly spaced; changes are raw step differences\n";
    }

    out += "unit roots (ADF, lags=" + std::to_string(report.adf_a_level.lags) + ", " +
           deterministic_name(report.adf_a_level.deterministic) + "):\n";
    text_adf_line(out, "a levels ", report.adf_a_level);
    text_adf_line(out, "b levels ", report.adf_b_level);
    text_adf_line(out, "a changes", report.adf_a_diff);
    text_adf_line(out, "b changes", report.adf_b_diff);
    out += "  (change-series tests are supplementary)\n";

    out += "correlations:\n";
    out += "  levels : r = " + fmt_num(report.corr_levels.r, "%.4f") +
           "  (n=" + std::to_string(report.corr_levels.n) +
           ", t=" + fmt_num(report.corr_levels.t_stat, "%.3f") +
           ", p=" + fmt_num(report.corr_levels.p_two_sided, "%.4g") + ")\n";
    out += "  changes: r = " + fmt_num(report.corr_changes.r, "%.4f") +
           "  (n=" + std::to_string(report.corr_changes.n) +
           ", t=" + fmt_num(report.corr_changes.t_stat, "%.3f") +
           ", p=" + fmt_num(report.corr_changes.p_two_sided, "%.4g") + ")\n";

    out += "regression (a on b, levels): beta1 = " + fmt_num(report.ols_levels.beta1) +
           "  se = " + fmt_num(report.ols_levels.se_beta1) +
           "  r^2 = " + fmt_num(report.ols_levels.r_squared, "%.4f") + "\n";
    out += "  residual lag-1 autocorrelation: rho = " +
           fmt_num(report.resid_diag.rho_hat, "%.4f") +
           " (n_pairs=" + std::to_string(report.resid_diag.n_pairs) + ")\n";

    if (report.mc) {
        const McDigest& d = *report.mc;
        out += "monte carlo null (" + std::to_string(d.n_walks) + " random walks with drift, seed " +
               std::to_string(d.master_seed) + ", " + d.rng_name + "):\n";
        out += "  share(level r > .30) = " + fmt_num(100.0 * d.level_corr_share_gt_030, "%.2f") +
               "%  share(level r > .75) = " + fmt_num(100.0 * d.level_corr_share_gt_075, "%.2f") +
               "%\n";
        out += "  mean level r = " + fmt_num(d.level_corr_mean, "%.4f") +
               "  mean change r = " + fmt_num(d.change_corr_mean, "%.4f") +
               "  max |change r| = " + fmt_num(d.change_corr_max_abs, "%.4f") + "\n";
        out += "  mean residual rho: levels " + fmt_num(d.level_resid_rho_mean, "%.4f") +
               "  changes " + fmt_num(d.change_resid_rho_mean, "%.4f") + "\n";
        if (d.degenerate_excluded > 0) {
            out += "  degenerate walks excluded: " + std::to_string(d.degenerate_excluded) + "\n";
        }
    }

    out += "verdict: " + std::string(verdict_name(report.verdict.category)) + "\n";
    for (const auto& line : report.verdict.rationale) {
        out += "  - " + line + "\n";
    }
    return out;
}

namespace {

void digest_vector(std::string& out, const char* name, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += name;
        out += ',' + std::to_string(i) + ',' + fmt_double(values[i]) + '\n';
    }
}

void digest_hist(std::string& out, const std::string& prefix, const Histogram& h) {
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        out += prefix + "_edge," + std::to_string(i) + ',' + fmt_double(h.edges[i]) + '\n';
    }
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        out += prefix + "_count," + std::to_string(i) + ',' + std::to_string(h.counts[i]) + '\n';
    }
    for (std::size_t i = 0; i < h.overlay.size(); ++i) {
        out += prefix + "_overlay," + std::to_string(i) + ',' + fmt_double(h.overlay[i]) + '\n';
    }
}

}  // namespace

std::string report_to_csv_digest(const AuditReport& report) {
    std::string out = "series,index,value\n";
    if (report.mc_full) {
        const MonteCarloSummary& mc = *report.mc_full;
        digest_vector(out, "level_corr", mc.level_corrs);
        digest_vector(out, "change_corr", mc.change_corrs);
        digest_vector(out, "level_resid_rho", mc.level_resid_rho);
        digest_vector(out, "change_resid_rho", mc.change_resid_rho);
        digest_hist(out, "level_hist", mc.level_hist);
        digest_hist(out, "change_hist", mc.change_hist);
        digest_hist(out, "level_resid_rho_hist", mc.level_rho_hist);
        digest_hist(out, "change_resid_rho_hist", mc.change_rho_hist);
    } else if (report.mc) {
        const McDigest& d = *report.mc;
        digest_hist(out, "level_hist", d.level_hist);
        digest_hist(out, "change_hist", d.change_hist);
        digest_hist(out, "level_resid_rho_hist", d.level_rho_hist);
        digest_hist(out, "change_resid_rho_hist", d.change_rho_hist);
    }
    return out;
}

std::string mc_summary_to_json(const MonteCarloSummary& summary) {
    const McDigest d = digest_from_summary(summary);
    JsonOut j;
    j.begin_obj();
    j.key("change_corr_max_abs");
    j.value(d.change_corr_max_abs);
    j.key("change_corr_mean");
    j.value(d.change_corr_mean);
    j.key("change_hist");
    emit_hist(j, d.change_hist);
    j.key("change_resid_rho_hist");
    emit_hist(j, d.change_rho_hist);
    j.key("change_resid_rho_mean");
    j.value(d.change_resid_rho_mean);
    j.key("degenerate_excluded");
    j.value(static_cast<std::uint64_t>(d.degenerate_excluded));
    j.key("drift_max");
    j.value(summary.drift_max);
    j.key("drift_min");
    j.value(summary.drift_min);
    j.key("length");
    j.value(static_cast<std::uint64_t>(summary.length));
    j.key("level_corr_mean");
    j.value(d.level_corr_mean);
    j.key("level_corr_share_gt_030");
    j.value(d.level_corr_share_gt_030);
    j.key("level_corr_share_gt_075");
    j.value(d.level_corr_share_gt_075);
    j.key("level_hist");
    emit_hist(j, d.level_hist);
    j.key("level_resid_rho_hist");
    emit_hist(j, d.level_rho_hist);
    j.key("level_resid_rho_mean");
    j.value(d.level_resid_rho_mean);
    j.key("master_seed");
    j.value(d.master_seed);
    j.key("n_walks");
    j.value(static_cast<std::uint64_t>(d.n_walks));
    j.key("rng_name");
    j.value(d.rng_name);
    j.end_obj();
    return j.str() + "\n";
}

std::string mc_summary_to_csv(const MonteCarloSummary& summary) {
    std::string out = "series,index,value\n";
    digest_vector(out, "level_corr", summary.level_corrs);
    digest_vector(out, "change_corr", summary.change_corrs);
    digest_vector(out, "level_resid_rho", summary.level_resid_rho);
    digest_vector(out, "change_resid_rho", summary.change_resid_rho);
    digest_hist(out, "level_hist", summary.level_hist);
    digest_hist(out, "change_hist", summary.change_hist);
    digest_hist(out, "level_resid_rho_hist", summary.level_rho_hist);
    digest_hist(out, "change_resid_rho_hist", summary.change_rho_hist);
    return out;
}

std::string mc_summary_to_text(const MonteCarloSummary& summary) {
    const McDigest d = digest_from_summary(summary);
    std::string out;
    out += "monte carlo null: " + std::to_string(d.n_walks) + " random walks with drift [" +
           fmt_num(summary.drift_min, "%g") + ", " + fmt_num(summary.drift_max, "%g") +
           "), length " + std::to_string(summary.length) + ", seed " +
           std::to_string(d.master_seed) + ", " + d.rng_name + "\n";
    out += "  share(level r > .30) = " + fmt_num(100.0 * d.level_corr_share_gt_030, "%.2f") +
           "%  share(level r > .75) = " + fmt_num(100.0 * d.level_corr_share_gt_075, "%.2f") +
           "%\n";
    out += "  mean level r = " + fmt_num(d.level_corr_mean, "%.4f") +
           "  mean change r = " + fmt_num(d.change_corr_mean, "%.4f") +
           "  max |change r| = " + fmt_num(d.change_corr_max_abs, "%.4f") + "\n";
    out += "  mean residual rho: levels " + fmt_num(d.level_resid_rho_mean, "%.4f") +
           "  changes " + fmt_num(d.change_resid_rho_mean, "%.4f") + "\n";
    if (d.degenerate_excluded > 0) {
        out += "  degenerate walks excluded: " + std::to_string(d.degenerate_excluded) + "\n";
    }
    return out;
}

void write_report(const AuditReport& report, ReportFormat format,
                  const std::string& destination) {
    std::string payload;
    switch (format) {
        case ReportFormat::json: payload = report_to_json(report); break;
        case ReportFormat::text: payload = report_to_text(report); break;
        case ReportFormat::csv_digest: payload = report_to_csv_digest(report); break;
    }
    if (destination == "-" || destination.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) {
        throw_error(ErrorCode::IoError, "cannot open '" + destination + "' for writing");
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
        throw_error(ErrorCode::IoError, "write failed for '" + destination + "'");
    }
}

}  // namespace trendaudit
