// AVX2 kernel variants. Lane j of each accumulator holds the partial sum
// of elements with index j mod 4, and the horizontal reduction adds the
// 128-bit halves first, which is exactly the scalar reference's
// (p0 + p2) + (p1 + p3) order. No FMA: products must round once, like in
// the reference.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "trendaudit/kernels.hpp"

namespace trendaudit::kernels::detail {

namespace {

// (l0 + l2) + (l1 + l3)
inline double reduce_canonical(__m256d acc) {
    const __m128d low = _mm256_castpd256_pd128(acc);
    const __m128d high = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(low, high);
    return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

}  // namespace

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    }
    double total = reduce_canonical(acc);
    for (; i < n; ++i) total += x[i];
    return total;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, prod);
    }
    double total = reduce_canonical(acc);
    for (; i < n; ++i) total += x[i] * y[i];
    return total;
}

Comoments comoments_avx2(const double* x, const double* y, std::size_t n,
                         double mean_x, double mean_y) {
    const __m256d mx = _mm256_set1_pd(mean_x);
    const __m256d my = _mm256_set1_pd(mean_y);
    __m256d axx = _mm256_setzero_pd();
    __m256d axy = _mm256_setzero_pd();
    __m256d ayy = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), mx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), my);
        axx = _mm256_add_pd(axx, _mm256_mul_pd(dx, dx));
        axy = _mm256_add_pd(axy, _mm256_mul_pd(dx, dy));
        ayy = _mm256_add_pd(ayy, _mm256_mul_pd(dy, dy));
    }
    Comoments m;
    m.sxx = reduce_canonical(axx);
    m.sxy = reduce_canonical(axy);
    m.syy = reduce_canonical(ayy);
    for (; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        m.sxx += dx * dx;
        m.sxy += dx * dy;
        m.syy += dy * dy;
    }
    return m;
}

}  // namespace trendaudit::kernels::detail

#endif  // x86_64
