#include "coordnet/kernels.hpp"

#include <stdexcept>

#include "kernels_detail.hpp"

namespace coordnet::kernels {
namespace {

using detail::Ops;

Backend pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return Backend::avx2;
    }
    return Backend::scalar;
#elif defined(__aarch64__)
    return Backend::neon;
#else
    return Backend::scalar;
#endif
}

const Ops* ops_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return &detail::scalar_ops;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
                return &detail::avx2_ops;
            }
#endif
            return nullptr;
        case Backend::neon:
#if defined(__aarch64__)
            return &detail::neon_ops;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

struct State {
    Backend backend = pick_default();
    const Ops* ops = ops_for(pick_default());
};

State& state() {
    static State s;
    return s;
}

}  // namespace

Backend active_backend() { return state().backend; }

bool backend_supported(Backend b) { return ops_for(b) != nullptr; }

void force_backend(Backend b) {
    const Ops* ops = ops_for(b);
    if (!ops) throw std::runtime_error("kernel backend not supported on this host: " + backend_name(b));
    state().backend = b;
    state().ops = ops;
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "unknown";
}

double dot(std::span<const double> a, std::span<const double> b) {
    return state().ops->dot(a.data(), b.data(), a.size());
}

std::uint64_t popcount_and(std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b) {
    return state().ops->popcount_and(a.data(), b.data(), a.size());
}

void exp_neg_scale(std::span<const double> x, double alpha, std::span<double> out) {
    state().ops->exp_neg_scale(x.data(), alpha, out.data(), x.size());
}

double exp_neg_scale_sum(std::span<const double> x, double alpha) {
    return state().ops->exp_neg_scale_sum(x.data(), alpha, x.size());
}

}  // namespace coordnet::kernels
