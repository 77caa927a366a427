#include "trendaudit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trendaudit/errors.hpp"
#include "trendaudit/kernels.hpp"

namespace trendaudit {

namespace {

double incomplete_beta_cf(double a, double b, double x) {
    // Lentz's algorithm for the continued fraction of I_x(a,b).
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * incomplete_beta_cf(a, b, x) / a;
    }
    return 1.0 - front * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

double student_t_sf(double t, int df) {
    if (df < 1) {
        throw_error(ErrorCode::InvalidParams, "student_t_sf: df must be >= 1");
    }
    if (t == 0.0) return 0.5;
    if (!std::isfinite(t)) return t > 0.0 ? 0.0 : 1.0;
    const double v = static_cast<double>(df);
    const double x = v / (v + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(0.5 * v, 0.5, x);
    return t > 0.0 ? tail : 1.0 - tail;
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y, CorrMode mode) {
    if (x.size() != y.size()) {
        throw_error(ErrorCode::LengthMismatch,
                    "pearson: lengths differ (" + std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()) + ")");
    }
    const std::size_t n = x.size();
    if (n < 3) {
        throw_error(ErrorCode::TooShort,
                    "pearson: need at least 3 observations, got " + std::to_string(n));
    }
    const double mean_x = kernels::sum(x) / static_cast<double>(n);
    const double mean_y = kernels::sum(y) / static_cast<double>(n);
    const auto m = kernels::comoments(x, y, mean_x, mean_y);
    if (m.sxx == 0.0 || m.syy == 0.0) {
        throw_error(ErrorCode::ConstantInput, "pearson: input vector has zero variance");
    }

    CorrelationResult res;
    res.mode = mode;
    res.n = n;
    res.r = m.sxy / std::sqrt(m.sxx * m.syy);
    // Rounding can push |r| infinitesimally past 1; clamp before the t map.
    res.r = std::clamp(res.r, -1.0, 1.0);
    const double df = static_cast<double>(n - 2);
    if (std::fabs(res.r) < 1.0) {
        res.t_stat = res.r * std::sqrt(df / (1.0 - res.r * res.r));
        res.p_two_sided = 2.0 * student_t_sf(std::fabs(res.t_stat), static_cast<int>(n - 2));
    } else {
        res.t_stat = std::copysign(std::numeric_limits<double>::infinity(), res.r);
        res.p_two_sided = 0.0;
    }
    return res;
}

OlsFit ols_simple(std::span<const double> y, std::span<const double> x) {
    if (x.size() != y.size()) {
        throw_error(ErrorCode::LengthMismatch,
                    "ols_simple: lengths differ (" + std::to_string(y.size()) + " vs " +
                        std::to_string(x.size()) + ")");
    }
    const std::size_t n = x.size();
    if (n < 3) {
        throw_error(ErrorCode::TooShort,
                    "ols_simple: need at least 3 observations, got " + std::to_string(n));
    }
    const double mean_x = kernels::sum(x) / static_cast<double>(n);
    const double mean_y = kernels::sum(y) / static_cast<double>(n);
    const auto m = kernels::comoments(x, y, mean_x, mean_y);
    if (m.sxx == 0.0) {
        throw_error(ErrorCode::ConstantRegressor, "ols_simple: regressor has zero variance");
    }

    OlsFit fit;
    fit.n = n;
    fit.beta1 = m.sxy / m.sxx;
    fit.beta0 = mean_y - fit.beta1 * mean_x;
    fit.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        fit.residuals[i] = y[i] - (fit.beta0 + fit.beta1 * x[i]);
    }
    const double ssr = kernels::dot(fit.residuals, fit.residuals);
    const double sst = m.syy;
    if (sst == 0.0) {
        fit.degenerate_response = true;
        fit.r_squared = 0.0;
    } else {
        fit.r_squared = std::clamp(1.0 - ssr / sst, 0.0, 1.0);
    }
    const double sigma2 = ssr / static_cast<double>(n - 2);
    fit.se_beta1 = std::sqrt(sigma2 / m.sxx);
    return fit;
}

Ar1Diagnostics residual_lag1_corr(const OlsFit& fit) {
    const std::size_t n = fit.residuals.size();
    if (n < 4) {
        throw_error(ErrorCode::TooShort,
                    "residual_lag1_corr: need at least 4 residuals, got " + std::to_string(n));
    }
    std::span<const double> res(fit.residuals);
    const auto lead = res.subspan(1);
    const auto lag = res.subspan(0, n - 1);
    const auto corr = pearson(lead, lag, CorrMode::levels);

    Ar1Diagnostics diag;
    diag.rho_hat = corr.r;
    diag.n_pairs = n - 1;
    return diag;
}

}  // namespace trendaudit
