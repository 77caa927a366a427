#include "trendaudit/lexdiv.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <string_view>

#include "trendaudit/errors.hpp"
#include "trendaudit/parallel.hpp"

namespace trendaudit {

namespace {

// Thread-safe log-gamma (std::lgamma may touch the global signgam).
double log_gamma(double x) {
#if defined(__GLIBC__)
    int sign = 0;
    return lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double log_choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    return log_gamma(static_cast<double>(n) + 1.0) - log_gamma(static_cast<double>(k) + 1.0) -
           log_gamma(static_cast<double>(n - k) + 1.0);
}

bool parse_u64(std::string_view field, std::uint64_t& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !field.empty();
}

bool parse_int(std::string_view field, int& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !field.empty();
}

}  // namespace

std::uint64_t hypergeometric_draw(std::uint64_t population, std::uint64_t successes,
                                  std::uint64_t draws, Xoshiro256pp& rng) {
    if (successes > population || draws > population) {
        throw_error(ErrorCode::InvalidParams, "hypergeometric_draw: invalid parameters");
    }
    if (draws == 0 || successes == 0) return 0;
    if (draws == population) return successes;
    if (successes == population) return draws;

    const std::uint64_t failures = population - successes;
    const std::uint64_t k_min = draws > failures ? draws - failures : 0;
    const std::uint64_t k_max = std::min(successes, draws);
    if (k_min == k_max) return k_min;

    // Inverse CDF by down/up search from the mode. Starting at the support
    // edge underflows for wide supports (the edge pmf can be below 1e-308);
    // the mode pmf is always representable. Consumes exactly one uniform.
    std::uint64_t mode = static_cast<std::uint64_t>(
        (static_cast<double>(draws) + 1.0) * (static_cast<double>(successes) + 1.0) /
        (static_cast<double>(population) + 2.0));
    mode = std::clamp(mode, k_min, k_max);

    const auto pmf_log = [&](std::uint64_t k) {
        return log_choose(successes, k) + log_choose(failures, draws - k) -
               log_choose(population, draws);
    };
    const auto ratio_up = [&](std::uint64_t k) {
        // pmf(k+1) / pmf(k)
        return static_cast<double>(successes - k) * static_cast<double>(draws - k) /
               (static_cast<double>(k + 1) *
                static_cast<double>(failures - draws + k + 1));
    };
    const auto ratio_down = [&](std::uint64_t k) {
        // pmf(k-1) / pmf(k)
        return static_cast<double>(k) * static_cast<double>(failures - draws + k) /
               (static_cast<double>(successes - k + 1) *
                static_cast<double>(draws - k + 1));
    };

    const double p_mode = std::exp(pmf_log(mode));
    double u = rng.next_double() - p_mode;
    if (u < 0.0) return mode;

    std::uint64_t lo = mode, hi = mode;
    double p_lo = p_mode, p_hi = p_mode;
    while (lo > k_min || hi < k_max) {
        if (hi < k_max && (lo == k_min || p_hi >= p_lo)) {
            p_hi *= ratio_up(hi);
            ++hi;
            u -= p_hi;
            if (u < 0.0) return hi;
        } else {
            p_lo *= ratio_down(lo);
            --lo;
            u -= p_lo;
            if (u < 0.0) return lo;
        }
    }
    // Residual numerical mass (< 1e-12): attribute it to the mode.
    return mode;
}

std::uint64_t sample_distinct_types(const std::vector<std::uint64_t>& counts,
                                    std::uint64_t sample_size, Xoshiro256pp& rng) {
    if (counts.empty()) {
        throw_error(ErrorCode::InvalidParams, "sample_distinct_types: empty count table");
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) {
        if (c == 0) {
            throw_error(ErrorCode::InvalidParams, "sample_distinct_types: zero count entry");
        }
        total += c;
    }
    if (sample_size > total) {
        throw_error(ErrorCode::SampleTooLarge,
                    "sample size " + std::to_string(sample_size) + " exceeds corpus total " +
                        std::to_string(total));
    }

    // Sequential conditional draws: for each type, how many of its tokens
    // land in the remaining sample capacity.
    std::uint64_t remaining_pop = total;
    std::uint64_t remaining_sample = sample_size;
    std::uint64_t distinct = 0;
    for (std::uint64_t c : counts) {
        if (remaining_sample == 0) break;
        const std::uint64_t taken = hypergeometric_draw(remaining_pop, c, remaining_sample, rng);
        if (taken > 0) ++distinct;
        remaining_pop -= c;
        remaining_sample -= taken;
    }
    return distinct;
}

YearCountTable ingest_ngram_counts(std::istream& in, const IngestOptions& options) {
    YearCountTable table;
    std::string line;
    std::uint64_t line_no = 0;

    auto malformed = [&](const std::string& why) {
        ++table.lines_malformed;
        if (options.strict) {
            throw_error(ErrorCode::MalformedLine,
                        "line " + std::to_string(line_no) + ": " + why);
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        ++table.lines_total;
        std::string_view row(line);
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        if (row.empty()) {
            malformed("empty line");
            continue;
        }

        // token \t year \t match_count \t volume_count
        std::string_view fields[4];
        std::size_t field_count = 0;
        while (field_count < 4) {
            const std::size_t tab = row.find('\t');
            fields[field_count++] = row.substr(0, tab);
            if (tab == std::string_view::npos) break;
            row.remove_prefix(tab + 1);
        }
        if (field_count != 4) {
            malformed("expected 4 TAB-separated fields");
            continue;
        }

        int year = 0;
        std::uint64_t match_count = 0;
        std::uint64_t volume_count = 0;
        if (fields[0].empty() || !parse_int(fields[1], year) ||
            !parse_u64(fields[2], match_count) || !parse_u64(fields[3], volume_count)) {
            malformed("unparseable field");
            continue;
        }

        table.tokens_parsed += match_count;
        if (year < options.year_min || year > options.year_max) {
            table.tokens_dropped_year_range += match_count;
            continue;
        }
        if (match_count == 0) continue;
        auto& yc = table.years[year];
        yc.counts[std::string(fields[0])] += match_count;
        yc.corpus_total += match_count;
    }

    if (options.min_count > 1) {
        // Applied to the summed per-year totals, after duplicate rows merge.
        for (auto it = table.years.begin(); it != table.years.end();) {
            auto& yc = it->second;
            for (auto cit = yc.counts.begin(); cit != yc.counts.end();) {
                if (cit->second < options.min_count) {
                    table.tokens_dropped_min_count += cit->second;
                    yc.corpus_total -= cit->second;
                    cit = yc.counts.erase(cit);
                } else {
                    ++cit;
                }
            }
            if (yc.counts.empty()) {
                it = table.years.erase(it);
            } else {
                ++it;
            }
        }
    }
    for (const auto& [year, yc] : table.years) table.tokens_retained += yc.corpus_total;
    return table;
}

TtrSeries ttr_series(const YearCountTable& table, const TtrOptions& options) {
    if (table.years.empty()) {
        throw_error(ErrorCode::NoEligibleYears, "ttr_series: no years in count table");
    }
    if (options.sample_size == 0 || options.repeats < 1) {
        throw_error(ErrorCode::InvalidParams, "ttr_series: invalid sample_size or repeats");
    }

    TtrSeries out;
    out.points.resize(table.years.size());
    std::vector<const std::pair<const int, YearCounts>*> entries;
    entries.reserve(table.years.size());
    for (const auto& entry : table.years) entries.push_back(&entry);

    parallel_for_chunks(entries.size(), options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const int year = entries[i]->first;
            const YearCounts& yc = entries[i]->second;
            TtrPoint& point = out.points[i];
            point.year = year;
            point.corpus_total = yc.corpus_total;
            point.sample_size = options.sample_size;
            if (yc.corpus_total < options.min_corpus) {
                point.skipped = true;
                point.skip_reason = "insufficient corpus (" + std::to_string(yc.corpus_total) +
                                    " < " + std::to_string(options.min_corpus) + " tokens)";
                continue;
            }

            // Fixed deterministic type order: lexicographic by token.
            std::vector<std::pair<std::string_view, std::uint64_t>> sorted;
            sorted.reserve(yc.counts.size());
            for (const auto& [token, count] : yc.counts) sorted.emplace_back(token, count);
            std::sort(sorted.begin(), sorted.end());
            std::vector<std::uint64_t> counts(sorted.size());
            for (std::size_t t = 0; t < sorted.size(); ++t) counts[t] = sorted[t].second;

            const std::uint64_t year_seed = Xoshiro256pp::substream_seed(
                options.master_seed, static_cast<std::uint64_t>(static_cast<std::int64_t>(year)));
            double sum_ttr = 0.0;
            double sum_ttr_sq = 0.0;
            for (int rep = 0; rep < options.repeats; ++rep) {
                Xoshiro256pp rng =
                    Xoshiro256pp::substream(year_seed, static_cast<std::uint64_t>(rep));
                const std::uint64_t types =
                    sample_distinct_types(counts, options.sample_size, rng);
                const double ttr = static_cast<double>(types) /
                                   static_cast<double>(options.sample_size);
                if (rep == 0) {
                    point.sampled_types = types;
                    point.ttr = ttr;
                }
                sum_ttr += ttr;
                sum_ttr_sq += ttr * ttr;
            }
            if (options.repeats > 1) {
                const double k = static_cast<double>(options.repeats);
                const double var = (sum_ttr_sq - sum_ttr * sum_ttr / k) / (k - 1.0);
                point.ttr_sd = var > 0.0 ? std::sqrt(var) : 0.0;
            }
        }
    });

    for (const TtrPoint& point : out.points) {
        if (point.skipped) continue;
        out.series.times.push_back(point.year);
        out.series.values.push_back(point.ttr);
    }
    if (out.series.times.empty()) {
        throw_error(ErrorCode::NoEligibleYears,
                    "ttr_series: every year is below the corpus floor");
    }
    out.series.label = "ttr";
    return out;
}

}  // namespace trendaudit
