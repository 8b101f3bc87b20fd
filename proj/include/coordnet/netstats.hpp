#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coordnet/bitmatrix.hpp"
#include "coordnet/network.hpp"
#include "coordnet/rng.hpp"

namespace coordnet {

struct DegreeDistribution {
    std::vector<int> degrees;  // one entry per node
};

struct PowerLawFit {
    double alpha = 0.0;               // > 1 for a valid fit
    int k_min = 0;
    int n_tail = 0;
    int n_positive = 0;               // positive-degree sample count
    double ks_stat = 0.0;
    std::optional<double> p_value;    // null iff the bootstrap was skipped
    bool is_scale_free = false;       // p_value >= 0.05
    bool degenerate = false;          // no tail with >= 2 distinct values
    bool small_tail = false;          // best tail below the minimum size
};

struct FitOptions {
    int bootstrap_reps = 2500;
    bool skip_bootstrap = false;
    int min_tail = 10;                 // smallest tail considered per k_min
    int min_bootstrap_samples = 50;    // positive-degree sample floor for p
    unsigned threads = 1;
};

// Clustering coefficient of one node over the binarized network:
// 2 n_i / (k_i (k_i - 1)); nullopt when the degree is below 2.
std::optional<double> clustering_coefficient(const DeveloperNetwork& network,
                                             std::size_t node);

// All nodes at once against a prebuilt adjacency.
std::vector<std::optional<double>> clustering_coefficients(const BitMatrix& adj);

// Gini coefficient of the degree multiset, mean-absolute-difference form.
// All-zero (or empty) input yields 0.
double gini(const DegreeDistribution& degrees);

// Discrete power-law tail fit: the paper's MLE approximation with the
// (k_min - 1/2) offset, k_min selected by minimal KS distance, and a
// semi-parametric bootstrap p-value (goodness of fit).
PowerLawFit fit_power_law(const DegreeDistribution& degrees, int bootstrap_reps,
                          std::uint64_t seed, const FitOptions& options = {});

// Inverse-CDF sampler for the zeta-normalized discrete power law on
// {k_min, k_min+1, ...}. Also backs the bootstrap's tail draws.
class PowerLawSampler {
public:
    PowerLawSampler(double alpha, int k_min);
    int draw(Rng& rng) const;
    double pmf(int k) const;

private:
    double alpha_;
    int k_min_;
    double zeta_kmin_;
    std::vector<double> cdf_;  // cdf_[t] = F(k_min + t)
};

enum class HierarchySubset { global, core_only };

struct HierarchyFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double beta1_stderr = 0.0;
    double p_beta1 = 1.0;
    double r_squared = 0.0;
    int n_points = 0;
    HierarchySubset subset = HierarchySubset::global;
    bool hierarchical = false;  // beta1 < 0 and p < 0.05
    std::optional<std::string> withheld;  // reason when no fit was possible
};

struct HierarchyOptions {
    bool robust = true;  // Huber IRLS; false selects plain least squares
};

// Regression of log C(k) on log k, where C(k) averages the clustering
// coefficient over nodes of degree k (k >= 2, average > 0). core_only keeps
// nodes at or above the 80th percentile of non-zero degrees.
HierarchyFit fit_hierarchy(const DeveloperNetwork& network, HierarchySubset subset,
                           const HierarchyOptions& options = {});

// Robust (Huber) straight-line fit, shared with the hierarchy regression.
struct LineFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double beta1_stderr = 0.0;
    double p_beta1 = 1.0;
    double r_squared = 0.0;
};
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys,
                 bool robust);

struct WindowMetrics {
    int window_id = 0;
    std::int64_t t_start = 0;
    std::int64_t t_end = 0;
    bool partial = false;
    int n_developers = 0;
    std::int64_t n_edges = 0;
    double gini = 0.0;
    std::optional<double> mean_cc;
    std::optional<double> var_cc;
    std::optional<double> cc_ci_halfwidth;  // 99.5% normal approximation
    std::optional<PowerLawFit> powerlaw;
    std::optional<double> pct_dev_tail;     // n_tail / n_developers
    HierarchyFit hierarchy_global;
    HierarchyFit hierarchy_core;
};

struct MetricsConfig {
    int bootstrap_reps = 2500;
    bool skip_bootstrap = false;
    std::uint64_t seed = 0;  // already salted per window by the caller
    bool robust_regression = true;
    unsigned threads = 1;
};

WindowMetrics summarize_window(const DeveloperNetwork& network,
                               const MetricsConfig& config);

}  // namespace coordnet
