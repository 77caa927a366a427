#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computation paths: long-double naive statistics, quadrature
// for the t distribution, the inclusion-exclusion expectation for
// without-replacement sampling, and a token-materializing sampler.

#include <cstdint>
#include <vector>

#include "trendaudit/rng.hpp"

namespace trendaudit::oracles {

long double sum_ld(const std::vector<double>& x);
long double dot_ld(const std::vector<double>& x, const std::vector<double>& y);

// Pearson r via naive long-double accumulation.
long double pearson_r_ld(const std::vector<double>& x, const std::vector<double>& y);

struct OlsLd {
    long double beta0;
    long double beta1;
    long double r_squared;
    long double se_beta1;
};
OlsLd ols_ld(const std::vector<double>& y, const std::vector<double>& x);

// Upper tail of Student's t by adaptive Simpson quadrature of the density
// (long double), absolute error well below 1e-12.
long double student_t_sf_quadrature(double t, int df);

// E[distinct types] in a without-replacement sample of size s:
// sum_w 1 - C(N - c_w, s)/C(N, s), with each ratio as an exact product.
long double expected_distinct_types(const std::vector<std::uint64_t>& counts,
                                    std::uint64_t sample_size);

// Materializes the token multiset, partially shuffles, counts distinct
// types in the prefix of size s. Only usable at small scale.
std::uint64_t sample_distinct_types_materialized(const std::vector<std::uint64_t>& counts,
                                                 std::uint64_t sample_size, Xoshiro256pp& rng);

}  // namespace trendaudit::oracles
