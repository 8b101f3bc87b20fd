#include "coordnet/mathutil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "coordnet/kernels.hpp"

namespace coordnet {

double quantile_type7(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
    if (sorted.size() == 1) return sorted[0];
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

MeanVar mean_var(std::span<const double> xs) {
    MeanVar mv;
    mv.n = xs.size();
    if (xs.empty()) return mv;
    double sum = 0.0;
    for (double x : xs) sum += x;
    mv.mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - mv.mean;
        ss += d * d;
    }
    mv.variance = ss / static_cast<double>(xs.size());
    return mv;
}

namespace {

// Closed tail of the Euler-Maclaurin expansion, valid once Q is large
// enough (Q >= 30 keeps the truncation below ~1e-14 relative).
double zeta_tail(double s, double q_big, double q_big_pow_neg_s) {
    const double inv_q = 1.0 / q_big;
    double acc = q_big_pow_neg_s * q_big / (s - 1.0);   // Q^(1-s)/(s-1)
    acc += 0.5 * q_big_pow_neg_s;                       // Q^-s / 2
    const double t1 = s * q_big_pow_neg_s * inv_q;
    acc += t1 / 12.0;                                   // B2 term
    const double t2 = t1 * (s + 1.0) * (s + 2.0) * inv_q * inv_q;
    acc -= t2 / 720.0;                                  // B4 term
    const double t3 = t2 * (s + 3.0) * (s + 4.0) * inv_q * inv_q;
    acc += t3 / 30240.0;                                // B6 term
    return acc;
}

constexpr double kZetaDirectCutoff = 30.0;

}  // namespace

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta requires s > 1");
    if (!(q >= 1.0)) throw std::invalid_argument("hurwitz_zeta requires q >= 1");
    std::size_t n_direct = 0;
    if (q < kZetaDirectCutoff) {
        n_direct = static_cast<std::size_t>(std::ceil(kZetaDirectCutoff - q));
    }
    double direct = 0.0;
    if (n_direct > 0) {
        double lns[32];
        for (std::size_t i = 0; i < n_direct; ++i) {
            lns[i] = std::log(q + static_cast<double>(i));
        }
        direct = kernels::exp_neg_scale_sum({lns, n_direct}, s);
    }
    const double q_big = q + static_cast<double>(n_direct);
    const double pow_neg_s = std::exp(-s * std::log(q_big));
    return direct + zeta_tail(s, q_big, pow_neg_s);
}

double student_t_two_sided_p(double t, double df) {
    if (df <= 0.0) return 1.0;
    if (std::isinf(t)) return 0.0;
    boost::math::students_t_distribution<double> dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

void LogTable::grow(std::size_t upto) {
    const std::size_t old = ln_.size();
    if (upto < old) return;
    ln_.resize(upto + 1);
    if (old == 0) ln_[0] = 0.0;
    for (std::size_t u = std::max<std::size_t>(old, 1); u <= upto; ++u) {
        ln_[u] = std::log(static_cast<double>(u));
    }
}

}  // namespace coordnet
