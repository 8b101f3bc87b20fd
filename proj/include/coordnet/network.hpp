#pragma once

#include <cstdint>
#include <vector>

#include "coordnet/bitmatrix.hpp"
#include "coordnet/lsi.hpp"
#include "coordnet/types.hpp"

namespace coordnet {

// Binary developer-by-artifact contribution matrix. Row and column order is
// first appearance in the commit stream, so rebuilds are stable.
struct ContributionMatrix {
    std::vector<DeveloperId> developers;  // M
    std::vector<ArtifactId> artifacts;    // N
    BitMatrix f;                          // M x N
};

ContributionMatrix build_contrib(const std::vector<const CommitRecord*>& commits);
ContributionMatrix build_contrib(const std::vector<CommitRecord>& commits);

// Weighted symmetric developer coordination network with a zero diagonal.
struct DeveloperNetwork {
    std::vector<DeveloperId> developers;
    std::vector<std::uint32_t> weights;  // M x M row-major
    int window_id = -1;

    std::size_t size() const { return developers.size(); }
    std::uint32_t weight(std::size_t i, std::size_t j) const {
        return weights[i * developers.size() + j];
    }

    // Edge iff weight > 0; degree-based metrics run on this view.
    BitMatrix binarized() const;
    std::vector<int> degrees() const;
    std::size_t edge_count() const;
};

// contrib * coupling * contrib^T with the diagonal kept (loop weights
// included). Exposed separately from build_network for verification.
std::vector<std::uint32_t> coordination_product(const ContributionMatrix& contrib,
                                                const CouplingMatrix& coupling);

// The full construction: triple product, then the diagonal is zeroed.
// Throws if coupling.artifacts differs from contrib.artifacts.
DeveloperNetwork build_network(const ContributionMatrix& contrib,
                               const CouplingMatrix& coupling);

}  // namespace coordnet
