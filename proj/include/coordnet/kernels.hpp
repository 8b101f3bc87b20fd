#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace coordnet::kernels {

enum class Backend { scalar, avx2, neon };

// Backend selected at startup from CPU capabilities.
Backend active_backend();
bool backend_supported(Backend b);

// Overrides the dispatch table; throws std::runtime_error if the backend is
// not supported on this host. Intended for equivalence tests and benchmarks.
void force_backend(Backend b);

std::string backend_name(Backend b);

// Dot product of two equal-length vectors.
double dot(std::span<const double> a, std::span<const double> b);

// Number of set bits in (a AND b) over equal-length word arrays.
std::uint64_t popcount_and(std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b);

// out[i] = exp(-alpha * x[i]). Bit-identical across backends: both run the
// same fma polynomial, so results do not depend on the dispatch decision.
void exp_neg_scale(std::span<const double> x, double alpha, std::span<double> out);

// Sum of exp(-alpha * x[i]). Summation order may differ between backends;
// agreement is to rounding, not bit-exact.
double exp_neg_scale_sum(std::span<const double> x, double alpha);

}  // namespace coordnet::kernels
