#include "trendaudit/adf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "trendaudit/errors.hpp"

namespace trendaudit {

namespace {

// ---------------------------------------------------------------------
// Dense least squares for the small ADF design matrix (k <= lags + 3),
// via Householder QR. Returns the coefficient vector, the residual sum
// of squares and the diagonal of (X'X)^-1.
// ---------------------------------------------------------------------
struct LstsqResult {
    std::vector<double> beta;
    std::vector<double> xtx_inv_diag;
    double ssr = 0.0;
};

LstsqResult lstsq_qr(std::vector<std::vector<double>> cols, std::vector<double> z) {
    const std::size_t k = cols.size();
    const std::size_t m = z.size();

    // Householder factorization, column by column.
    std::vector<std::vector<double>> v(k);  // reflectors
    for (std::size_t j = 0; j < k; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < m; ++i) norm += cols[j][i] * cols[j][i];
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            throw_error(ErrorCode::ConstantSeries,
                        "adf_test: degenerate regression (collinear or constant input)");
        }
        const double alpha = cols[j][j] >= 0.0 ? -norm : norm;
        std::vector<double> w(m - j, 0.0);
        w[0] = cols[j][j] - alpha;
        for (std::size_t i = j + 1; i < m; ++i) w[i - j] = cols[j][i];
        double wnorm2 = 0.0;
        for (double t : w) wnorm2 += t * t;
        if (wnorm2 > 0.0) {
            // Apply I - 2 w w^T / (w^T w) to the remaining columns and z.
            for (std::size_t c = j; c < k; ++c) {
                double proj = 0.0;
                for (std::size_t i = j; i < m; ++i) proj += w[i - j] * cols[c][i];
                proj = 2.0 * proj / wnorm2;
                for (std::size_t i = j; i < m; ++i) cols[c][i] -= proj * w[i - j];
            }
            double proj = 0.0;
            for (std::size_t i = j; i < m; ++i) proj += w[i - j] * z[i];
            proj = 2.0 * proj / wnorm2;
            for (std::size_t i = j; i < m; ++i) z[i] -= proj * w[i - j];
        }
        v[j] = std::move(w);
        if (std::fabs(cols[j][j]) < 1e-12 * norm) {
            throw_error(ErrorCode::ConstantSeries,
                        "adf_test: singular regression (collinear columns)");
        }
    }

    // Back substitution: R beta = (Q^T z)_{1..k}.
    LstsqResult out;
    out.beta.assign(k, 0.0);
    for (std::size_t idx = k; idx-- > 0;) {
        double acc = z[idx];
        for (std::size_t c = idx + 1; c < k; ++c) acc -= cols[c][idx] * out.beta[c];
        out.beta[idx] = acc / cols[idx][idx];
    }

    // SSR from the tail of the rotated response.
    for (std::size_t i = k; i < m; ++i) out.ssr += z[i] * z[i];

    // (X'X)^-1 = R^-1 R^-T; diag entries are row norms of R^-1.
    // Solve R W = I column by column.
    std::vector<std::vector<double>> rinv(k, std::vector<double>(k, 0.0));
    for (std::size_t col = 0; col < k; ++col) {
        for (std::size_t idx = col + 1; idx-- > 0;) {
            double acc = (idx == col) ? 1.0 : 0.0;
            for (std::size_t c = idx + 1; c <= col; ++c) acc -= cols[c][idx] * rinv[c][col];
            rinv[idx][col] = acc / cols[idx][idx];
        }
    }
    out.xtx_inv_diag.assign(k, 0.0);
    for (std::size_t row = 0; row < k; ++row) {
        double acc = 0.0;
        for (std::size_t col = row; col < k; ++col) acc += rinv[row][col] * rinv[row][col];
        out.xtx_inv_diag[row] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------
// Critical values: response-surface coefficients from MacKinnon (2010),
// "Critical Values for Cointegration Tests", QED working paper 1227,
// Table 2, single-variable case. cv(p, T) = b0 + b1/T + b2/T^2 + b3/T^3.
// ---------------------------------------------------------------------
struct RsRow {
    double b0, b1, b2, b3;
};
struct RsTable {
    RsRow p01, p05, p10;
};

constexpr RsTable kRsNone{
    {-2.56574, -2.2358, -3.627, 0.0},
    {-1.94100, -0.2686, -3.365, 31.223},
    {-1.61682, 0.2656, -2.714, 25.364},
};
constexpr RsTable kRsConstant{
    {-3.43035, -6.5393, -16.786, -79.433},
    {-2.86154, -2.8903, -4.234, -40.040},
    {-2.56677, -1.5384, -2.809, 0.0},
};
constexpr RsTable kRsConstantTrend{
    {-3.95877, -9.0531, -28.428, -134.155},
    {-3.41049, -4.3904, -9.036, -45.374},
    {-3.12705, -2.5856, -3.925, -22.380},
};

const RsTable& rs_table(Deterministic det) {
    switch (det) {
        case Deterministic::none: return kRsNone;
        case Deterministic::constant: return kRsConstant;
        case Deterministic::constant_trend: return kRsConstantTrend;
    }
    return kRsConstant;
}

double rs_eval(const RsRow& row, double t) {
    return row.b0 + row.b1 / t + row.b2 / (t * t) + row.b3 / (t * t * t);
}

// Additional asymptotic quantile anchors for the approximate p-value,
// from Fuller (1976), "Introduction to Statistical Time Series", Table
// 8.5.2 (T -> infinity rows). Right-tail values are approximate; the
// p-value is labeled approximate throughout.
struct Anchor {
    double stat;
    double p;
};

std::vector<Anchor> p_anchors(Deterministic det, double t_eff) {
    const RsTable& rs = rs_table(det);
    std::vector<Anchor> anchors;
    anchors.push_back({rs_eval(rs.p01, t_eff), 0.01});
    switch (det) {
        case Deterministic::none:
            anchors.push_back({-2.23, 0.025});
            anchors.push_back({rs_eval(rs.p05, t_eff), 0.05});
            anchors.push_back({rs_eval(rs.p10, t_eff), 0.10});
            anchors.push_back({0.89, 0.90});
            anchors.push_back({1.28, 0.95});
            anchors.push_back({1.62, 0.975});
            anchors.push_back({2.00, 0.99});
            break;
        case Deterministic::constant:
            anchors.push_back({-3.12, 0.025});
            anchors.push_back({rs_eval(rs.p05, t_eff), 0.05});
            anchors.push_back({rs_eval(rs.p10, t_eff), 0.10});
            anchors.push_back({-0.44, 0.90});
            anchors.push_back({-0.07, 0.95});
            anchors.push_back({0.23, 0.975});
            anchors.push_back({0.60, 0.99});
            break;
        case Deterministic::constant_trend:
            anchors.push_back({-3.66, 0.025});
            anchors.push_back({rs_eval(rs.p05, t_eff), 0.05});
            anchors.push_back({rs_eval(rs.p10, t_eff), 0.10});
            anchors.push_back({-1.25, 0.90});
            anchors.push_back({-0.94, 0.95});
            anchors.push_back({-0.66, 0.975});
            anchors.push_back({-0.33, 0.99});
            break;
    }
    // Edge extension segments down to the clamp bounds.
    anchors.insert(anchors.begin(), {anchors.front().stat - 1.5, 0.001});
    anchors.push_back({anchors.back().stat + 1.5, 0.999});
    // The finite-sample anchors drift with T; drop any that break strict
    // monotonicity so interpolation stays well defined.
    std::vector<Anchor> clean;
    for (const auto& a : anchors) {
        if (clean.empty() || (a.stat > clean.back().stat && a.p > clean.back().p)) {
            clean.push_back(a);
        }
    }
    return clean;
}

double approx_p_from_anchors(const std::vector<Anchor>& anchors, double stat) {
    if (stat <= anchors.front().stat) return 0.001;
    if (stat >= anchors.back().stat) return 0.999;
    for (std::size_t i = 1; i < anchors.size(); ++i) {
        if (stat <= anchors[i].stat) {
            const auto& lo = anchors[i - 1];
            const auto& hi = anchors[i];
            const double w = (stat - lo.stat) / (hi.stat - lo.stat);
            return lo.p + w * (hi.p - lo.p);
        }
    }
    return 0.999;
}

}  // namespace

const char* deterministic_name(Deterministic det) {
    switch (det) {
        case Deterministic::none: return "none";
        case Deterministic::constant: return "constant";
        case Deterministic::constant_trend: return "constant_trend";
    }
    return "constant";
}

Deterministic deterministic_from_name(const std::string& name) {
    if (name == "none" || name == "nc") return Deterministic::none;
    if (name == "constant" || name == "c") return Deterministic::constant;
    if (name == "constant_trend" || name == "ct") return Deterministic::constant_trend;
    throw_error(ErrorCode::InvalidParams, "unknown deterministic spec: " + name);
}

double adf_approx_p(double statistic, std::size_t n_effective, Deterministic det) {
    return approx_p_from_anchors(p_anchors(det, static_cast<double>(n_effective)), statistic);
}

AdfResult adf_test(const TimeSeries& s, int lags, Deterministic det) {
    if (lags < 0) {
        throw_error(ErrorCode::InvalidParams, "adf_test: lags must be >= 0");
    }
    const std::size_t n = s.size();
    const std::size_t min_n = static_cast<std::size_t>(lags) + 10;
    if (n < min_n) {
        throw_error(ErrorCode::TooShort, "adf_test: need at least " + std::to_string(min_n) +
                                             " observations, got " + std::to_string(n));
    }
    const auto& y = s.values;
    if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) {
        throw_error(ErrorCode::ConstantSeries, "adf_test: series '" + s.label + "' is constant");
    }

    const std::size_t m = n - static_cast<std::size_t>(lags) - 1;  // n_effective
    std::vector<double> dy(n - 1);
    for (std::size_t t = 1; t < n; ++t) dy[t - 1] = y[t] - y[t - 1];

    // Columns: [const] [trend] y_{t-1} dy_{t-1} .. dy_{t-lags}; response dy_t.
    std::vector<std::vector<double>> cols;
    std::size_t gamma_col = 0;
    if (det != Deterministic::none) {
        cols.emplace_back(m, 1.0);
        ++gamma_col;
    }
    if (det == Deterministic::constant_trend) {
        std::vector<double> trend(m);
        for (std::size_t r = 0; r < m; ++r) trend[r] = static_cast<double>(r + 1);
        cols.push_back(std::move(trend));
        ++gamma_col;
    }
    {
        std::vector<double> level(m);
        for (std::size_t r = 0; r < m; ++r) level[r] = y[r + static_cast<std::size_t>(lags)];
        cols.push_back(std::move(level));
    }
    for (int j = 1; j <= lags; ++j) {
        std::vector<double> lagged(m);
        for (std::size_t r = 0; r < m; ++r) {
            lagged[r] = dy[r + static_cast<std::size_t>(lags - j)];
        }
        cols.push_back(std::move(lagged));
    }
    std::vector<double> z(m);
    for (std::size_t r = 0; r < m; ++r) z[r] = dy[r + static_cast<std::size_t>(lags)];

    const std::size_t k = cols.size();
    if (m <= k) {
        throw_error(ErrorCode::TooShort, "adf_test: not enough observations for the regression");
    }
    const auto fit = lstsq_qr(std::move(cols), std::move(z));
    const double sigma2 = fit.ssr / static_cast<double>(m - k);
    const double se_gamma = std::sqrt(sigma2 * fit.xtx_inv_diag[gamma_col]);
    if (se_gamma == 0.0) {
        throw_error(ErrorCode::ConstantSeries, "adf_test: zero-variance regression");
    }

    AdfResult res;
    res.statistic = fit.beta[gamma_col] / se_gamma;
    res.lags = lags;
    res.deterministic = det;
    res.n_effective = m;
    const RsTable& rs = rs_table(det);
    const double t_eff = static_cast<double>(m);
    res.crit_1pct = rs_eval(rs.p01, t_eff);
    res.crit_5pct = rs_eval(rs.p05, t_eff);
    res.crit_10pct = rs_eval(rs.p10, t_eff);
    // A statistic exactly at the critical value fails to reject.
    res.reject_at_5pct = res.statistic < res.crit_5pct;
    res.approx_p = adf_approx_p(res.statistic, m, det);
    return res;
}

}  // namespace trendaudit
