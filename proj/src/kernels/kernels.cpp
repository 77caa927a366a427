#include "trendaudit/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "trendaudit/errors.hpp"

namespace trendaudit::kernels {

namespace {

Backend detect_default() {
#if defined(__aarch64__)
    return Backend::neon;
#elif defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
    return Backend::scalar;
#else
    return Backend::scalar;
#endif
}

Backend initial_backend() {
    const char* env = std::getenv("TRENDAUDIT_SIMD");
    if (env != nullptr && std::strlen(env) > 0 && std::strcmp(env, "auto") != 0) {
        if (std::strcmp(env, "scalar") == 0 && backend_supported(Backend::scalar))
            return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::avx2))
            return Backend::avx2;
        if (std::strcmp(env, "neon") == 0 && backend_supported(Backend::neon))
            return Backend::neon;
        // Unknown or unsupported request: fall through to detection rather
        // than failing a whole run over an env var.
    }
    return detect_default();
}

std::atomic<Backend>& backend_state() {
    static std::atomic<Backend> state{initial_backend()};
    return state;
}

}  // namespace

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "unknown";
}

bool backend_supported(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return backend_state().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (!backend_supported(backend)) {
        throw_error(ErrorCode::InvalidParams,
                    std::string("kernel backend not supported on this host: ") +
                        backend_name(backend));
    }
    backend_state().store(backend, std::memory_order_relaxed);
}

double sum(std::span<const double> x) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: return detail::sum_avx2(x.data(), x.size());
#endif
#if defined(__aarch64__)
        case Backend::neon: return detail::sum_neon(x.data(), x.size());
#endif
        default: return detail::sum_scalar(x.data(), x.size());
    }
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw_error(ErrorCode::LengthMismatch, "dot: input lengths differ");
    }
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: return detail::dot_avx2(x.data(), y.data(), x.size());
#endif
#if defined(__aarch64__)
        case Backend::neon: return detail::dot_neon(x.data(), y.data(), x.size());
#endif
        default: return detail::dot_scalar(x.data(), y.data(), x.size());
    }
}

Comoments comoments(std::span<const double> x, std::span<const double> y,
                    double mean_x, double mean_y) {
    if (x.size() != y.size()) {
        throw_error(ErrorCode::LengthMismatch, "comoments: input lengths differ");
    }
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2:
            return detail::comoments_avx2(x.data(), y.data(), x.size(), mean_x, mean_y);
#endif
#if defined(__aarch64__)
        case Backend::neon:
            return detail::comoments_neon(x.data(), y.data(), x.size(), mean_x, mean_y);
#endif
        default:
            return detail::comoments_scalar(x.data(), y.data(), x.size(), mean_x, mean_y);
    }
}

}  // namespace trendaudit::kernels
