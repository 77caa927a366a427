// trendaudit: detect spurious correlations between trending time series.
//
// Subcommands: corr, adf, audit, simulate, ttr. Exit codes: 0 success,
// 2 usage error, 3 data error, 4 statistical precondition violated.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trendaudit/audit.hpp"
#include "trendaudit/csv.hpp"
#include "trendaudit/errors.hpp"
#include "trendaudit/lexdiv.hpp"
#include "trendaudit/monte_carlo.hpp"
#include "trendaudit/report.hpp"
#include "trendaudit/version.hpp"

namespace {

using namespace trendaudit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitStat = 4;

struct SeriesArgs {
    std::string time_column = "time";
    std::string value_column = "value";
};

void add_series_columns(CLI::App* cmd, SeriesArgs& args) {
    cmd->add_option("--time-col", args.time_column, "Name of the time column")
        ->capture_default_str();
    cmd->add_option("--value-col", args.value_column, "Name of the value column")
        ->capture_default_str();
}

void write_text(const std::string& payload, const std::string& destination) {
    if (destination == "-" || destination.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw_error(ErrorCode::IoError, "cannot open '" + destination + "' for writing");
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw_error(ErrorCode::IoError, "write failed for '" + destination + "'");
}

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// ----------------------------------------------------------------------
// corr
// ----------------------------------------------------------------------
struct CorrOptions {
    std::string path_a, path_b;
    SeriesArgs cols;
    bool changes = false;
};

int run_corr(const CorrOptions& opt) {
    const TimeSeries a = read_series_csv_file(opt.path_a, opt.cols.time_column,
                                              opt.cols.value_column).series;
    const TimeSeries b = read_series_csv_file(opt.path_b, opt.cols.time_column,
                                              opt.cols.value_column).series;
    const AlignedPair pair = align(a, b);
    TimeSeries sa = TimeSeries::make(pair.times, pair.a_values, a.label);
    TimeSeries sb = TimeSeries::make(pair.times, pair.b_values, b.label);
    CorrMode mode = CorrMode::levels;
    if (opt.changes) {
        const Differenced da = difference(sa);
        const Differenced db = difference(sb);
        if (da.has_gaps || db.has_gaps) {
            std::cerr << "note: aligned stamps are unevenly spaced; changes are raw step "
                         "differences\n";
        }
        sa = da.series;
        sb = db.series;
        mode = CorrMode::changes;
    }
    const CorrelationResult res = pearson(sa.values, sb.values, mode);
    std::cout << (mode == CorrMode::levels ? "levels" : "changes") << ": r = "
              << fmt(res.r, "%.6f") << "  (n = " << res.n << ", t = " << fmt(res.t_stat, "%.4f")
              << ", p = " << fmt(res.p_two_sided, "%.6g") << ")\n";
    return kExitOk;
}

// ----------------------------------------------------------------------
// adf
// ----------------------------------------------------------------------
struct AdfOptions {
    std::string path;
    SeriesArgs cols;
    int lags = 1;
    std::string deterministic = "constant";
};

int run_adf(const AdfOptions& opt) {
    const TimeSeries s = read_series_csv_file(opt.path, opt.cols.time_column,
                                              opt.cols.value_column).series;
    const AdfResult res = adf_test(s, opt.lags, deterministic_from_name(opt.deterministic));
    std::cout << "ADF statistic = " << fmt(res.statistic, "%.6f") << "  (lags=" << res.lags
              << ", deterministic=" << deterministic_name(res.deterministic)
              << ", n_eff=" << res.n_effective << ")\n";
    std::cout << "critical values: 1% " << fmt(res.crit_1pct, "%.4f") << "  5% "
              << fmt(res.crit_5pct, "%.4f") << "  10% " << fmt(res.crit_10pct, "%.4f") << "\n";
    std::cout << "verdict at 5%: "
              << (res.reject_at_5pct ? "reject the unit-root null (series looks stationary)"
                                     : "fail to reject the unit-root null (unit root plausible)");
    if (res.approx_p) std::cout << "  [approx p ~ " << fmt(*res.approx_p, "%.3f") << "]";
    std::cout << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------------
// audit
// ----------------------------------------------------------------------
struct AuditOptions {
    std::string path_a, path_b;
    SeriesArgs cols;
    AuditConfig config;
    std::string out = "-";
    std::string format;  // empty = json when --out given, else text
};

int run_audit(const AuditOptions& opt) {
    const CsvSeries a = read_series_csv_file(opt.path_a, opt.cols.time_column,
                                             opt.cols.value_column);
    const CsvSeries b = read_series_csv_file(opt.path_b, opt.cols.time_column,
                                             opt.cols.value_column);
    if (a.dropped_rows > 0) {
        std::cerr << "note: dropped " << a.dropped_rows << " rows with missing values from "
                  << opt.path_a << "\n";
    }
    if (b.dropped_rows > 0) {
        std::cerr << "note: dropped " << b.dropped_rows << " rows with missing values from "
                  << opt.path_b << "\n";
    }
    const AuditReport report = audit(a.series, b.series, opt.config);
    std::string format = opt.format;
    if (format.empty()) format = (opt.out == "-" || opt.out.empty()) ? "text" : "json";
    write_report(report, report_format_from_name(format), opt.out);
    if (opt.out != "-" && !opt.out.empty()) {
        std::cerr << "report written to " << opt.out << "\n";
    }
    return kExitOk;
}

// ----------------------------------------------------------------------
// simulate
// ----------------------------------------------------------------------
struct SimulateOptions {
    std::string target_path;
    SeriesArgs cols;
    McConfig config;
    std::string out = "-";
    std::string format = "text";
};

int run_simulate(const SimulateOptions& opt) {
    const TimeSeries target = read_series_csv_file(opt.target_path, opt.cols.time_column,
                                                   opt.cols.value_column).series;
    McConfig config = opt.config;
    config.params.length = target.size();
    const MonteCarloSummary summary = run_monte_carlo(target, config);
    std::string payload;
    if (opt.format == "json") {
        payload = mc_summary_to_json(summary);
    } else if (opt.format == "csv") {
        payload = mc_summary_to_csv(summary);
    } else if (opt.format == "text") {
        payload = mc_summary_to_text(summary);
    } else {
        throw_error(ErrorCode::InvalidParams, "unknown simulate format: " + opt.format);
    }
    write_text(payload, opt.out);
    return kExitOk;
}

// ----------------------------------------------------------------------
// ttr
// ----------------------------------------------------------------------
struct TtrCliOptions {
    std::string ngrams_path;
    IngestOptions ingest;
    TtrOptions ttr;
    std::string out = "-";
};

int run_ttr(const TtrCliOptions& opt) {
    std::ifstream in(opt.ngrams_path);
    if (!in) throw_error(ErrorCode::IoError, "cannot open '" + opt.ngrams_path + "'");
    const YearCountTable table = ingest_ngram_counts(in, opt.ingest);
    if (table.lines_malformed > 0) {
        std::cerr << "note: skipped " << table.lines_malformed << " malformed lines\n";
    }
    if (table.tokens_dropped_year_range > 0 || table.tokens_dropped_min_count > 0) {
        std::cerr << "note: dropped " << table.tokens_dropped_year_range
                  << " tokens outside the year range and " << table.tokens_dropped_min_count
                  << " below the count floor\n";
    }
    const TtrSeries result = ttr_series(table, opt.ttr);

    std::string csv = "year,ttr,sampled_types,corpus_total,skipped";
    const bool with_sd = opt.ttr.repeats > 1;
    if (with_sd) csv += ",ttr_sd";
    csv += "\n";
    for (const TtrPoint& p : result.points) {
        csv += std::to_string(p.year) + ",";
        if (p.skipped) {
            csv += ",,";
        } else {
            csv += fmt(p.ttr, "%.12g") + "," + std::to_string(p.sampled_types) + ",";
        }
        csv += std::to_string(p.corpus_total);
        csv += p.skipped ? ",true" : ",false";
        if (with_sd) csv += "," + (p.skipped ? std::string() : fmt(p.ttr_sd, "%.12g"));
        csv += "\n";
        if (p.skipped) {
            std::cerr << "note: year " << p.year << " skipped: " << p.skip_reason << "\n";
        }
    }
    write_text(csv, opt.out);
    return kExitOk;
}

}  // namespace

namespace {

int run_main(int argc, char** argv) {
    CLI::App app{"spurious-correlation audit for trending time series"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    CorrOptions corr_opt;
    CLI::App* corr = app.add_subcommand("corr", "Pearson correlation of two aligned series");
    corr->add_option("--a", corr_opt.path_a, "CSV with the first series")->required();
    corr->add_option("--b", corr_opt.path_b, "CSV with the second series")->required();
    corr->add_flag("--changes", corr_opt.changes, "Correlate period-to-period changes");
    add_series_columns(corr, corr_opt.cols);

    AdfOptions adf_opt;
    CLI::App* adf = app.add_subcommand("adf", "Augmented Dickey-Fuller unit-root test");
    adf->add_option("--input", adf_opt.path, "CSV with the series")->required();
    adf->add_option("--lags", adf_opt.lags, "Lagged-difference terms")->capture_default_str();
    adf->add_option("--deterministic", adf_opt.deterministic,
                    "none | constant | constant_trend")
        ->capture_default_str();
    add_series_columns(adf, adf_opt.cols);

    AuditOptions audit_opt;
    CLI::App* audit_cmd = app.add_subcommand("audit", "Full level-vs-change audit of a pair");
    audit_cmd->add_option("--a", audit_opt.path_a, "CSV with series a (response)")->required();
    audit_cmd->add_option("--b", audit_opt.path_b, "CSV with series b (predictor)")->required();
    audit_cmd->add_option("--walks", audit_opt.config.mc_walks,
                          "Random-walk null ensemble size (0 = skip)")
        ->capture_default_str();
    audit_cmd->add_option("--seed", audit_opt.config.master_seed, "Master RNG seed")
        ->capture_default_str();
    audit_cmd->add_option("--out", audit_opt.out, "Output path (- = stdout)")
        ->capture_default_str();
    audit_cmd->add_option("--format", audit_opt.format,
                          "json | text | csv-digest (default: json with --out, else text)");
    audit_cmd->add_option("--alpha", audit_opt.config.alpha, "Significance threshold")
        ->capture_default_str();
    audit_cmd->add_option("--min-overlap", audit_opt.config.min_overlap,
                          "Minimum aligned observations")
        ->capture_default_str();
    audit_cmd->add_option("--lags", audit_opt.config.adf_lags, "ADF lag order")
        ->capture_default_str();
    std::string audit_det = "constant";
    audit_cmd->add_option("--deterministic", audit_det, "ADF deterministic terms")
        ->capture_default_str();
    audit_cmd->add_option("--drift-min", audit_opt.config.drift_min, "Walk drift lower bound")
        ->capture_default_str();
    audit_cmd->add_option("--drift-max", audit_opt.config.drift_max, "Walk drift upper bound")
        ->capture_default_str();
    audit_cmd->add_option("--bins", audit_opt.config.histogram_bins, "Histogram bins")
        ->capture_default_str();
    add_series_columns(audit_cmd, audit_opt.cols);

    SimulateOptions sim_opt;
    CLI::App* simulate = app.add_subcommand("simulate",
                                            "Random-walk-with-drift null against a target");
    simulate->add_option("--target", sim_opt.target_path, "CSV with the target series")
        ->required();
    simulate->add_option("--walks", sim_opt.config.n_walks, "Ensemble size")
        ->capture_default_str();
    simulate->add_option("--drift-min", sim_opt.config.params.drift_min, "Drift lower bound")
        ->capture_default_str();
    simulate->add_option("--drift-max", sim_opt.config.params.drift_max, "Drift upper bound")
        ->capture_default_str();
    simulate->add_option("--seed", sim_opt.config.master_seed, "Master RNG seed")
        ->capture_default_str();
    simulate->add_option("--bins", sim_opt.config.histogram_bins, "Histogram bins")
        ->capture_default_str();
    simulate->add_option("--out", sim_opt.out, "Output path (- = stdout)")
        ->capture_default_str();
    simulate->add_option("--format", sim_opt.format, "text | json | csv")
        ->capture_default_str();
    add_series_columns(simulate, sim_opt.cols);

    TtrCliOptions ttr_opt;
    CLI::App* ttr = app.add_subcommand("ttr", "Type-token ratios from a 1-gram count file");
    ttr->add_option("--ngrams", ttr_opt.ngrams_path, "TAB-separated 1-gram count file")
        ->required();
    ttr->add_option("--sample-size", ttr_opt.ttr.sample_size, "Tokens per year sample")
        ->capture_default_str();
    ttr->add_option("--min-corpus", ttr_opt.ttr.min_corpus,
                    "Skip years with fewer tokens than this")
        ->capture_default_str();
    ttr->add_option("--min-count", ttr_opt.ingest.min_count,
                    "Drop types whose per-year total is below this")
        ->capture_default_str();
    ttr->add_option("--seed", ttr_opt.ttr.master_seed, "Master RNG seed")->capture_default_str();
    ttr->add_option("--repeats", ttr_opt.ttr.repeats,
                    "Samples per year; >1 adds a ttr_sd column")
        ->capture_default_str();
    ttr->add_option("--year-min", ttr_opt.ingest.year_min, "Lowest year to ingest");
    ttr->add_option("--year-max", ttr_opt.ingest.year_max, "Highest year to ingest");
    ttr->add_flag("--strict", ttr_opt.ingest.strict, "Abort on the first malformed line");
    ttr->add_option("--out", ttr_opt.out, "Output path (- = stdout)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (corr->parsed()) return run_corr(corr_opt);
        if (adf->parsed()) return run_adf(adf_opt);
        if (audit_cmd->parsed()) {
            audit_opt.config.adf_det = deterministic_from_name(audit_det);
            return run_audit(audit_opt);
        }
        if (simulate->parsed()) return run_simulate(sim_opt);
        if (ttr->parsed()) return run_ttr(ttr_opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_data_error() ? kExitData : kExitStat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return kExitData;
    } catch (...) {
        std::cerr << "fatal: unknown error\n";
        return kExitData;
    }
}
