#include <bit>
#include <cmath>

#include "kernels_detail.hpp"

namespace coordnet::kernels::detail {

double exp_scalar(double x) {
    if (x < kExpUnderflow) return 0.0;
    if (x > kExpOverflow) return HUGE_VAL;
    const double k = std::nearbyint(x * kExpLog2e);
    double r = std::fma(k, -kExpLn2Hi, x);
    r = std::fma(k, -kExpLn2Lo, r);
    double p = kExpCoeff[0];
    for (int i = 1; i < kExpCoeffCount; ++i) p = std::fma(p, r, kExpCoeff[i]);
    const auto ki = static_cast<std::int64_t>(k);
    const double two_k = std::bit_cast<double>(static_cast<std::uint64_t>(ki + 1023) << 52);
    return p * two_k;
}

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

std::uint64_t popcount_and_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

void exp_neg_scale_scalar(const double* x, double alpha, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = exp_scalar(-alpha * x[i]);
}

double exp_neg_scale_sum_scalar(const double* x, double alpha, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += exp_scalar(-alpha * x[i]);
    return acc;
}

}  // namespace

const Ops scalar_ops = {
    dot_scalar,
    popcount_and_scalar,
    exp_neg_scale_scalar,
    exp_neg_scale_sum_scalar,
};

}  // namespace coordnet::kernels::detail
