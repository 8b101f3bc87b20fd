#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coordnet/bitmatrix.hpp"
#include "coordnet/types.hpp"

namespace coordnet {

// Term-document matrix with the paper's weighting: weight(t, d) =
// tf_t * ln(N / df_t) where tf_t is the global frequency of t across the
// whole collection and df_t the number of documents containing t. A term
// present in every document therefore weighs zero everywhere.
struct TermDocumentMatrix {
    std::vector<std::string> terms;  // M, first-appearance order
    std::vector<ArtifactId> docs;    // N, caller order
    std::vector<double> weights;     // M x N row-major

    std::size_t n_terms() const { return terms.size(); }
    std::size_t n_docs() const { return docs.size(); }
    double at(std::size_t t, std::size_t d) const { return weights[t * docs.size() + d]; }
};

TermDocumentMatrix build_tfidf(
    const std::vector<std::pair<ArtifactId, std::vector<std::string>>>& docs);

struct RankPolicy {
    std::optional<int> fixed;  // exact rank; clamped to min(M, N)
    double energy = 0.95;      // else: smallest rank with this share of squared
                               // singular-value energy
    int cap = 300;
};

struct LatentSpace {
    int rank = 0;
    std::size_t n_docs = 0;
    std::vector<double> doc_vectors;       // N x rank row-major, rows = V_r * S_r
    std::vector<double> singular_values;   // rank values, non-increasing

    std::span<const double> doc(std::size_t i) const {
        return {doc_vectors.data() + i * static_cast<std::size_t>(rank),
                static_cast<std::size_t>(rank)};
    }
};

// Truncated SVD of the weighted matrix. Singular vectors get a canonical
// sign (largest-magnitude component positive) so repeated runs are
// bit-identical. Throws if the matrix has no non-zero entry.
LatentSpace project_lsi(const TermDocumentMatrix& td, const RankPolicy& policy);

struct CouplingMatrix {
    std::vector<ArtifactId> artifacts;
    BitMatrix phi;  // symmetric, unit diagonal
};

// phi[i][j] = 1 iff cosine(doc_i, doc_j) >= threshold, or i == j.
// Zero vectors have cosine 0 with everything.
CouplingMatrix couple(const LatentSpace& space, std::vector<ArtifactId> artifacts,
                      double threshold);

// Identity coupling for corpora with no usable text (every artifact coupled
// only with itself).
CouplingMatrix identity_coupling(std::vector<ArtifactId> artifacts);

double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace coordnet
