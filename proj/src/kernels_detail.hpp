#pragma once

#include <cstddef>
#include <cstdint>

namespace coordnet::kernels::detail {

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    std::uint64_t (*popcount_and)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    void (*exp_neg_scale)(const double*, double, double*, std::size_t);
    double (*exp_neg_scale_sum)(const double*, double, std::size_t);
};

extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

// exp polynomial shared by every backend. Argument reduction
// exp(x) = 2^k * exp(r), |r| <= ln(2)/2, then a degree-13 Taylor Horner
// evaluated with fused multiply-adds. Backends must execute exactly this
// operation sequence so scalar and SIMD lanes agree bit-for-bit.
inline constexpr double kExpLog2e = 1.4426950408889634074;
inline constexpr double kExpLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kExpLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kExpUnderflow = -708.0;
inline constexpr double kExpOverflow = 709.0;
inline constexpr double kExpCoeff[] = {
    1.0 / 6227020800.0,  // 1/13!
    1.0 / 479001600.0,
    1.0 / 39916800.0,
    1.0 / 3628800.0,
    1.0 / 362880.0,
    1.0 / 40320.0,
    1.0 / 5040.0,
    1.0 / 720.0,
    1.0 / 120.0,
    1.0 / 24.0,
    1.0 / 6.0,
    1.0 / 2.0,
    1.0,  // r
    1.0,  // constant term
};
inline constexpr int kExpCoeffCount = 14;

double exp_scalar(double x);

}  // namespace coordnet::kernels::detail
