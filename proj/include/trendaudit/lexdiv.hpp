#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "trendaudit/rng.hpp"
#include "trendaudit/series.hpp"

// Type-token-ratio pipeline: stream 1-gram count files (TAB-separated
// token, year, match_count, volume_count), then per year compute the
// number of distinct types in a fixed-size random sample drawn without
// replacement from the year's token multiset. No token is ever
// materialized; the sampler walks the count table with conditional
// hypergeometric draws.

namespace trendaudit {

struct YearCounts {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t corpus_total = 0;

    std::size_t distinct_types() const { return counts.size(); }
};

struct YearCountTable {
    std::map<int, YearCounts> years;  // ordered by year

    // Ingestion accounting (token occurrences, not rows).
    std::uint64_t tokens_parsed = 0;
    std::uint64_t tokens_retained = 0;
    std::uint64_t tokens_dropped_year_range = 0;
    std::uint64_t tokens_dropped_min_count = 0;
    std::uint64_t lines_total = 0;
    std::uint64_t lines_malformed = 0;
};

struct IngestOptions {
    std::uint64_t min_count = 1;
    int year_min = std::numeric_limits<int>::min();
    int year_max = std::numeric_limits<int>::max();
    // true: abort on the first malformed line; false: skip and count.
    bool strict = false;
};

// Single pass over the stream. Duplicate (token, year) rows are summed;
// the min_count filter applies to the summed per-year totals.
YearCountTable ingest_ngram_counts(std::istream& in, const IngestOptions& options = {});

// Distinct types in a uniform random sample of sample_size tokens drawn
// without replacement. counts must be in a fixed order (the caller picks
// it; ttr_series uses lexicographic token order).
std::uint64_t sample_distinct_types(const std::vector<std::uint64_t>& counts,
                                    std::uint64_t sample_size, Xoshiro256pp& rng);

// One draw of Hypergeometric(population N, successes K, draws n).
std::uint64_t hypergeometric_draw(std::uint64_t population, std::uint64_t successes,
                                  std::uint64_t draws, Xoshiro256pp& rng);

struct TtrPoint {
    int year = 0;
    std::uint64_t corpus_total = 0;
    std::uint64_t sample_size = 0;
    std::uint64_t sampled_types = 0;
    double ttr = 0.0;
    bool skipped = false;
    std::string skip_reason;
    // Standard deviation of ttr across repeats (0 when repeats == 1).
    double ttr_sd = 0.0;
};

struct TtrOptions {
    std::uint64_t sample_size = 1'000'000;
    std::uint64_t min_corpus = 1'000'000;
    std::uint64_t master_seed = 0;
    int repeats = 1;
    // 0 = thread_budget().
    std::size_t threads = 0;
};

struct TtrSeries {
    TimeSeries series;  // non-skipped years only
    std::vector<TtrPoint> points;
};

// Per-year sub-streams come from (master_seed, year), so adding or
// removing years never changes another year's sample. The series value is
// always the first draw; extra repeats only feed ttr_sd.
TtrSeries ttr_series(const YearCountTable& table, const TtrOptions& options = {});

}  // namespace trendaudit
