#pragma once

#include <cstddef>
#include <span>
#include <string>

// Reduction kernels behind the statistical routines. Every backend
// (scalar reference, AVX2, NEON) evaluates the same canonical reduction
// tree so results are bit-identical across backends and hosts:
//
//   * the main body is processed in blocks of 4 with one partial
//     accumulator per lane, element i feeding accumulator i % 4;
//   * lanes are combined as (p0 + p2) + (p1 + p3);
//   * the tail (n % 4 elements) is added sequentially afterwards;
//   * products are rounded individually (no FMA contraction).
//
// The SIMD variants are equivalence-tested against the scalar reference
// for exact equality, not approximate agreement.

namespace trendaudit::kernels {

enum class Backend {
    scalar,
    avx2,
    neon,
};

// Second central comoments about externally supplied means.
struct Comoments {
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
};

const char* backend_name(Backend backend);

// True if the backend can run on this host.
bool backend_supported(Backend backend);

// Backend in use. Defaults to the best supported one; the TRENDAUDIT_SIMD
// environment variable (scalar|avx2|neon|auto) overrides at first use.
Backend active_backend();

// Force a backend (tests). Throws InvalidParams if unsupported here.
void set_backend(Backend backend);

double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

// sxx = sum((x-mx)^2), sxy = sum((x-mx)(y-my)), syy = sum((y-my)^2).
Comoments comoments(std::span<const double> x, std::span<const double> y,
                    double mean_x, double mean_y);

namespace detail {

double sum_scalar(const double* x, std::size_t n);
double dot_scalar(const double* x, const double* y, std::size_t n);
Comoments comoments_scalar(const double* x, const double* y, std::size_t n,
                           double mean_x, double mean_y);

#if defined(__x86_64__) || defined(_M_X64)
double sum_avx2(const double* x, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
Comoments comoments_avx2(const double* x, const double* y, std::size_t n,
                         double mean_x, double mean_y);
#endif

#if defined(__aarch64__)
double sum_neon(const double* x, std::size_t n);
double dot_neon(const double* x, const double* y, std::size_t n);
Comoments comoments_neon(const double* x, const double* y, std::size_t n,
                         double mean_x, double mean_y);
#endif

}  // namespace detail

}  // namespace trendaudit::kernels
