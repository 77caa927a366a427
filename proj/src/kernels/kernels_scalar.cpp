// Scalar reference kernels. These define the canonical reduction order;
// the SIMD backends must reproduce their results bit for bit.
//
// Compiled with -ffp-contract=off so the two products per iteration are
// rounded exactly like the mul+add sequences in the SIMD variants.

#include "trendaudit/kernels.hpp"

namespace trendaudit::kernels::detail {

double sum_scalar(const double* x, std::size_t n) {
    double p0 = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        p0 += x[i];
        p1 += x[i + 1];
        p2 += x[i + 2];
        p3 += x[i + 3];
    }
    double total = (p0 + p2) + (p1 + p3);
    for (; i < n; ++i) total += x[i];
    return total;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double p0 = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        p0 += x[i] * y[i];
        p1 += x[i + 1] * y[i + 1];
        p2 += x[i + 2] * y[i + 2];
        p3 += x[i + 3] * y[i + 3];
    }
    double total = (p0 + p2) + (p1 + p3);
    for (; i < n; ++i) total += x[i] * y[i];
    return total;
}

Comoments comoments_scalar(const double* x, const double* y, std::size_t n,
                           double mean_x, double mean_y) {
    double xx0 = 0.0, xx1 = 0.0, xx2 = 0.0, xx3 = 0.0;
    double xy0 = 0.0, xy1 = 0.0, xy2 = 0.0, xy3 = 0.0;
    double yy0 = 0.0, yy1 = 0.0, yy2 = 0.0, yy3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double dx0 = x[i] - mean_x, dy0 = y[i] - mean_y;
        const double dx1 = x[i + 1] - mean_x, dy1 = y[i + 1] - mean_y;
        const double dx2 = x[i + 2] - mean_x, dy2 = y[i + 2] - mean_y;
        const double dx3 = x[i + 3] - mean_x, dy3 = y[i + 3] - mean_y;
        xx0 += dx0 * dx0;
        xx1 += dx1 * dx1;
        xx2 += dx2 * dx2;
        xx3 += dx3 * dx3;
        xy0 += dx0 * dy0;
        xy1 += dx1 * dy1;
        xy2 += dx2 * dy2;
        xy3 += dx3 * dy3;
        yy0 += dy0 * dy0;
        yy1 += dy1 * dy1;
        yy2 += dy2 * dy2;
        yy3 += dy3 * dy3;
    }
    Comoments m;
    m.sxx = (xx0 + xx2) + (xx1 + xx3);
    m.sxy = (xy0 + xy2) + (xy1 + xy3);
    m.syy = (yy0 + yy2) + (yy1 + yy3);
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
