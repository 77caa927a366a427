#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Pearson correlation with exact t-based significance, simple OLS and the
// lag-1 residual-autocorrelation diagnostic.

namespace trendaudit {

enum class CorrMode { levels, changes };

struct CorrelationResult {
    double r = 0.0;
    std::size_t n = 0;
    double t_stat = 0.0;
    double p_two_sided = 1.0;
    CorrMode mode = CorrMode::levels;
};

struct OlsFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    std::vector<double> residuals;
    double r_squared = 0.0;
    std::size_t n = 0;
    double se_beta1 = 0.0;
    // True when the response had zero variance (SST == 0).
    bool degenerate_response = false;
};

struct Ar1Diagnostics {
    double rho_hat = 0.0;
    std::size_t n_pairs = 0;
};

// Sample product-moment correlation; p from the t distribution with n-2
// degrees of freedom. Both vectors must be non-constant and n >= 3.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y,
                          CorrMode mode = CorrMode::levels);

// Least-squares fit of y on x with intercept; classical homoskedastic
// standard error for the slope.
OlsFit ols_simple(std::span<const double> y, std::span<const double> x);

// Correlation of (e_2..e_n) with (e_1..e_{n-1}).
Ar1Diagnostics residual_lag1_corr(const OlsFit& fit);

// Upper-tail probability of Student's t with df degrees of freedom,
// evaluated through the regularized incomplete beta function.
double student_t_sf(double t, int df);

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace trendaudit
