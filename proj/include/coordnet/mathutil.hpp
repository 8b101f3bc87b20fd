#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace coordnet {

// Empirical quantile with linear interpolation (R type 7).
// `sorted` must be ascending and non-empty; q in [0, 1].
double quantile_type7(std::span<const double> sorted, double q);

// Mean and population variance; zero-length input yields {0, 0}.
struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;
    std::size_t n = 0;
};
MeanVar mean_var(std::span<const double> xs);

// Hurwitz zeta sum_{i>=0} (q+i)^(-s) for s > 1, q >= 1.
// Euler-Maclaurin with the direct terms batched through the exp kernel.
double hurwitz_zeta(double s, double q);

// Two-sided p-value of a t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

// ln(u) for integer arguments, grown on demand. Index 0 is unused.
class LogTable {
public:
    explicit LogTable(std::size_t upto = 64) { grow(upto); }
    void grow(std::size_t upto);
    double operator[](std::size_t u) const { return ln_[u]; }
    std::size_t size() const { return ln_.size(); }
    std::span<const double> slice(std::size_t first, std::size_t count) const {
        return {ln_.data() + first, count};
    }

private:
    std::vector<double> ln_;
};

}  // namespace coordnet
