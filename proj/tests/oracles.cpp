#include "oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace trendaudit::oracles {

long double sum_ld(const std::vector<double>& x) {
    long double acc = 0.0L;
    for (double v : x) acc += v;
    return acc;
}

long double dot_ld(const std::vector<double>& x, const std::vector<double>& y) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += static_cast<long double>(x[i]) * static_cast<long double>(y[i]);
    }
    return acc;
}

long double pearson_r_ld(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    const long double mx = sum_ld(x) / n;
    const long double my = sum_ld(y) / n;
    long double sxx = 0.0L, sxy = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mx;
        const long double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

OlsLd ols_ld(const std::vector<double>& y, const std::vector<double>& x) {
    const std::size_t n = x.size();
    const long double mx = sum_ld(x) / n;
    const long double my = sum_ld(y) / n;
    long double sxx = 0.0L, sxy = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mx;
        const long double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    OlsLd fit{};
    fit.beta1 = sxy / sxx;
    fit.beta0 = my - fit.beta1 * mx;
    long double ssr = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double r = y[i] - (fit.beta0 + fit.beta1 * x[i]);
        ssr += r * r;
    }
    fit.r_squared = syy == 0.0L ? 0.0L : 1.0L - ssr / syy;
    fit.se_beta1 = std::sqrt(ssr / (n - 2) / sxx);
    return fit;
}

namespace {

long double t_density(long double x, long double df, long double log_norm) {
    return std::exp(log_norm - 0.5L * (df + 1.0L) * std::log1p(x * x / df));
}

long double simpson(long double a, long double b, long double fa, long double fm,
                    long double fb, long double df, long double log_norm, long double eps,
                    int depth) {
    const long double m = 0.5L * (a + b);
    const long double lm = 0.5L * (a + m);
    const long double rm = 0.5L * (m + b);
    const long double flm = t_density(lm, df, log_norm);
    const long double frm = t_density(rm, df, log_norm);
    const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
    const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0L * eps) {
        return left + right + (left + right - whole) / 15.0L;
    }
    return simpson(a, m, fa, flm, fm, df, log_norm, eps / 2.0L, depth - 1) +
           simpson(m, b, fm, frm, fb, df, log_norm, eps / 2.0L, depth - 1);
}

}  // namespace

long double student_t_sf_quadrature(double t, int df) {
    if (t == 0.0) return 0.5L;
    if (t < 0.0) return 1.0L - student_t_sf_quadrature(-t, df);
    const long double v = df;
    const long double log_norm = std::lgamma((v + 1.0L) / 2.0L) - std::lgamma(v / 2.0L) -
                                 0.5L * std::log(v * std::acos(-1.0L));
    // sf(t) = 0.5 - integral of the density over [0, t].
    const long double fa = t_density(0.0L, v, log_norm);
    const long double fb = t_density(t, v, log_norm);
    const long double fm = t_density(0.5L * t, v, log_norm);
    const long double integral =
        simpson(0.0L, t, fa, fm, fb, v, log_norm, 1e-16L, 60);
    return 0.5L - integral;
}

long double expected_distinct_types(const std::vector<std::uint64_t>& counts,
                                    std::uint64_t sample_size) {
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (sample_size > total) throw std::invalid_argument("sample larger than corpus");
    long double expected = 0.0L;
    for (std::uint64_t c : counts) {
        // C(N-c, s)/C(N, s) = prod_{j=0..c-1} (N - s - j) / (N - j)
        long double miss = 1.0L;
        for (std::uint64_t j = 0; j < c; ++j) {
            const long double num = static_cast<long double>(total) - sample_size - j;
            const long double den = static_cast<long double>(total) - j;
            if (num <= 0.0L) {
                miss = 0.0L;
                break;
            }
            miss *= num / den;
        }
        expected += 1.0L - miss;
    }
    return expected;
}

std::uint64_t sample_distinct_types_materialized(const std::vector<std::uint64_t>& counts,
                                                 std::uint64_t sample_size, Xoshiro256pp& rng) {
    std::vector<std::uint32_t> tokens;
    for (std::size_t w = 0; w < counts.size(); ++w) {
        for (std::uint64_t k = 0; k < counts[w]; ++k) {
            tokens.push_back(static_cast<std::uint32_t>(w));
        }
    }
    if (sample_size > tokens.size()) throw std::invalid_argument("sample larger than corpus");
    // Partial Fisher-Yates: the first sample_size slots become the sample.
    for (std::uint64_t i = 0; i < sample_size; ++i) {
        const std::uint64_t remaining = tokens.size() - i;
        const std::uint64_t j = i + static_cast<std::uint64_t>(rng.next_double() * remaining);
        std::swap(tokens[i], tokens[j]);
    }
    std::vector<std::uint8_t> seen(counts.size(), 0);
    std::uint64_t distinct = 0;
    for (std::uint64_t i = 0; i < sample_size; ++i) {
        if (!seen[tokens[i]]) {
            seen[tokens[i]] = 1;
            ++distinct;
        }
    }
    return distinct;
}

}  // namespace trendaudit::oracles
