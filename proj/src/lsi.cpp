#include "coordnet/lsi.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "coordnet/kernels.hpp"

namespace coordnet {

TermDocumentMatrix build_tfidf(
    const std::vector<std::pair<ArtifactId, std::vector<std::string>>>& docs) {
    if (docs.size() < 2) {
        throw std::invalid_argument("build_tfidf: need at least 2 documents");
    }
    TermDocumentMatrix td;
    td.docs.reserve(docs.size());
    for (const auto& [id, tokens] : docs) td.docs.push_back(id);

    std::unordered_map<std::string, std::size_t> term_index;
    std::vector<std::uint64_t> global_tf;
    // per-term doc frequency and per-doc term counts
    std::vector<std::uint64_t> df;
    std::vector<std::unordered_map<std::size_t, std::uint64_t>> doc_counts(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& tok : docs[d].second) {
            auto [it, inserted] = term_index.try_emplace(tok, td.terms.size());
            if (inserted) {
                td.terms.push_back(tok);
                global_tf.push_back(0);
                df.push_back(0);
            }
            const std::size_t t = it->second;
            ++global_tf[t];
            auto [cit, first_in_doc] = doc_counts[d].try_emplace(t, 0);
            if (first_in_doc) ++df[t];
            ++cit->second;
        }
    }

    const std::size_t m = td.terms.size();
    const std::size_t n = td.docs.size();
    const double n_docs = static_cast<double>(n);
    td.weights.assign(m * n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
        for (const auto& [t, count] : doc_counts[d]) {
            const double idf = std::log(n_docs / static_cast<double>(df[t]));
            td.weights[t * n + d] = static_cast<double>(global_tf[t]) * idf;
        }
    }
    return td;
}

namespace {

// Flips each singular-vector pair so the largest-magnitude component of the
// right vector is positive; ties resolve to the lowest index.
void canonicalize_signs(Eigen::MatrixXd& v) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        Eigen::Index arg = 0;
        double best = 0.0;
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            const double mag = std::abs(v(r, c));
            if (mag > best) {
                best = mag;
                arg = r;
            }
        }
        if (v(arg, c) < 0.0) v.col(c) = -v.col(c);
    }
}

}  // namespace

LatentSpace project_lsi(const TermDocumentMatrix& td, const RankPolicy& policy) {
    const auto m = static_cast<Eigen::Index>(td.n_terms());
    const auto n = static_cast<Eigen::Index>(td.n_docs());
    bool any_nonzero = false;
    for (double w : td.weights) {
        if (w != 0.0) {
            any_nonzero = true;
            break;
        }
    }
    if (m == 0 || !any_nonzero) {
        throw std::runtime_error("project_lsi: no discriminative terms");
    }

    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        x(td.weights.data(), m, n);

    // Right singular vectors and singular values. With many more terms than
    // documents the Gram matrix route is much cheaper than a direct SVD and
    // only the document-side factors are needed anyway.
    Eigen::MatrixXd v;          // n x r
    Eigen::VectorXd sigma;      // r, descending
    const Eigen::Index full = std::min(m, n);
    if (m >= n) {
        const Eigen::MatrixXd gram = x.transpose() * x;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
        if (eig.info() != Eigen::Success) {
            throw std::runtime_error("project_lsi: eigendecomposition failed");
        }
        v.resize(n, full);
        sigma.resize(full);
        for (Eigen::Index i = 0; i < full; ++i) {
            const Eigen::Index src = n - 1 - i;  // ascending -> descending
            sigma(i) = std::sqrt(std::max(0.0, eig.eigenvalues()(src)));
            v.col(i) = eig.eigenvectors().col(src);
        }
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinV);
        sigma = svd.singularValues();
        v = svd.matrixV();
    }
    canonicalize_signs(v);

    int rank;
    if (policy.fixed) {
        rank = std::clamp(*policy.fixed, 1, static_cast<int>(full));
    } else {
        double total = 0.0;
        for (Eigen::Index i = 0; i < sigma.size(); ++i) total += sigma(i) * sigma(i);
        double acc = 0.0;
        Eigen::Index r = 0;
        while (r < sigma.size() && acc < policy.energy * total) {
            acc += sigma(r) * sigma(r);
            ++r;
        }
        rank = static_cast<int>(std::max<Eigen::Index>(1, r));
        rank = std::min(rank, policy.cap);
    }

    LatentSpace space;
    space.rank = rank;
    space.n_docs = static_cast<std::size_t>(n);
    space.singular_values.assign(sigma.data(), sigma.data() + rank);
    space.doc_vectors.resize(static_cast<std::size_t>(n) * rank);
    for (Eigen::Index d = 0; d < n; ++d) {
        for (int r = 0; r < rank; ++r) {
            space.doc_vectors[static_cast<std::size_t>(d) * rank + r] = v(d, r) * sigma(r);
        }
    }
    return space;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    const double na = kernels::dot(a, a);
    const double nb = kernels::dot(b, b);
    if (na <= 0.0 || nb <= 0.0) return 0.0;
    return kernels::dot(a, b) / std::sqrt(na * nb);
}

CouplingMatrix couple(const LatentSpace& space, std::vector<ArtifactId> artifacts,
                      double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("coupling threshold must be in (0, 1]");
    }
    if (artifacts.size() != space.n_docs) {
        throw std::invalid_argument("couple: artifact list does not match latent space");
    }
    const std::size_t n = artifacts.size();
    CouplingMatrix out{std::move(artifacts), BitMatrix(n)};
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        norms[i] = kernels::dot(space.doc(i), space.doc(i));
        out.phi.set(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (norms[i] <= 0.0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (norms[j] <= 0.0) continue;
            const double cos =
                kernels::dot(space.doc(i), space.doc(j)) / std::sqrt(norms[i] * norms[j]);
            if (cos >= threshold) out.phi.set_sym(i, j);
        }
    }
    return out;
}

CouplingMatrix identity_coupling(std::vector<ArtifactId> artifacts) {
    const std::size_t n = artifacts.size();
    CouplingMatrix out{std::move(artifacts), BitMatrix(n)};
    for (std::size_t i = 0; i < n; ++i) out.phi.set(i, i);
    return out;
}

}  // namespace coordnet
