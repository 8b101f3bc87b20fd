#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

#include "kernels_detail.hpp"

namespace coordnet::kernels::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double total = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) total += a[i] * b[i];
    return total;
}

std::uint64_t popcount_and_neon(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(
            vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
        total += vaddvq_u8(vcntq_u8(v));
    }
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

// exp stays on the shared scalar polynomial; the transcendental loop is not
// worth a hand-rolled NEON variant for the sizes seen here.
void exp_neg_scale_neon(const double* x, double alpha, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = exp_scalar(-alpha * x[i]);
}

double exp_neg_scale_sum_neon(const double* x, double alpha, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += exp_scalar(-alpha * x[i]);
    return acc;
}

}  // namespace

const Ops neon_ops = {
    dot_neon,
    popcount_and_neon,
    exp_neg_scale_neon,
    exp_neg_scale_sum_neon,
};

}  // namespace coordnet::kernels::detail

#endif  // __aarch64__
