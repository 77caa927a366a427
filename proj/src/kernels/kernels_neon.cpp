// NEON kernel variants. Two float64x2 accumulators per reduction: acc01
// carries lanes 0/1 of the canonical 4-lane layout and acc23 lanes 2/3,
// so vaddq(acc01, acc23) yields (p0+p2, p1+p3) and the final lane sum is
// the reference's (p0 + p2) + (p1 + p3). No FMA.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "trendaudit/kernels.hpp"

namespace trendaudit::kernels::detail {

namespace {

inline double reduce_canonical(float64x2_t acc01, float64x2_t acc23) {
    const float64x2_t pair = vaddq_f64(acc01, acc23);
    return vgetq_lane_f64(pair, 0) + vgetq_lane_f64(pair, 1);
}

}  // namespace

double sum_neon(const double* x, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc01 = vaddq_f64(acc01, vld1q_f64(x + i));
        acc23 = vaddq_f64(acc23, vld1q_f64(x + i + 2));
    }
    double total = reduce_canonical(acc01, acc23);
    for (; i < n; ++i) total += x[i];
    return total;
}

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
    }
    double total = reduce_canonical(acc01, acc23);
    for (; i < n; ++i) total += x[i] * y[i];
    return total;
}

Comoments comoments_neon(const double* x, const double* y, std::size_t n,
                         double mean_x, double mean_y) {
    const float64x2_t mx = vdupq_n_f64(mean_x);
    const float64x2_t my = vdupq_n_f64(mean_y);
    float64x2_t xx01 = vdupq_n_f64(0.0), xx23 = vdupq_n_f64(0.0);
    float64x2_t xy01 = vdupq_n_f64(0.0), xy23 = vdupq_n_f64(0.0);
    float64x2_t yy01 = vdupq_n_f64(0.0), yy23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t dx01 = vsubq_f64(vld1q_f64(x + i), mx);
        const float64x2_t dx23 = vsubq_f64(vld1q_f64(x + i + 2), mx);
        const float64x2_t dy01 = vsubq_f64(vld1q_f64(y + i), my);
        const float64x2_t dy23 = vsubq_f64(vld1q_f64(y + i + 2), my);
        xx01 = vaddq_f64(xx01, vmulq_f64(dx01, dx01));
        xx23 = vaddq_f64(xx23, vmulq_f64(dx23, dx23));
        xy01 = vaddq_f64(xy01, vmulq_f64(dx01, dy01));
        xy23 = vaddq_f64(xy23, vmulq_f64(dx23, dy23));
        yy01 = vaddq_f64(yy01, vmulq_f64(dy01, dy01));
        yy23 = vaddq_f64(yy23, vmulq_f64(dy23, dy23));
    }
    Comoments m;
    m.sxx = reduce_canonical(xx01, xx23);
    m.sxy = reduce_canonical(xy01, xy23);
    m.syy = reduce_canonical(yy01, yy23);
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

#endif  // __aarch64__
