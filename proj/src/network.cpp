#include "coordnet/network.hpp"

#include <stdexcept>
#include <unordered_map>

#include "coordnet/kernels.hpp"

namespace coordnet {

namespace {

ContributionMatrix build_contrib_impl(const std::vector<const CommitRecord*>& commits) {
    if (commits.empty()) throw std::invalid_argument("build_contrib: empty commit list");
    ContributionMatrix cm;
    std::unordered_map<std::string, std::size_t> dev_index;
    std::unordered_map<ArtifactId, std::size_t, ArtifactIdHash> art_index;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (const CommitRecord* c : commits) {
        auto [dit, dnew] = dev_index.try_emplace(c->author.canonical_key, cm.developers.size());
        if (dnew) cm.developers.push_back(c->author);
        for (const Contribution& contrib : c->contributions) {
            auto [ait, anew] = art_index.try_emplace(contrib.artifact, cm.artifacts.size());
            if (anew) cm.artifacts.push_back(contrib.artifact);
            cells.emplace_back(dit->second, ait->second);
        }
    }
    cm.f = BitMatrix(cm.developers.size(), cm.artifacts.size());
    for (auto [d, a] : cells) cm.f.set(d, a);
    return cm;
}

}  // namespace

ContributionMatrix build_contrib(const std::vector<const CommitRecord*>& commits) {
    return build_contrib_impl(commits);
}

ContributionMatrix build_contrib(const std::vector<CommitRecord>& commits) {
    std::vector<const CommitRecord*> ptrs;
    ptrs.reserve(commits.size());
    for (const auto& c : commits) ptrs.push_back(&c);
    return build_contrib_impl(ptrs);
}

std::vector<std::uint32_t> coordination_product(const ContributionMatrix& contrib,
                                                const CouplingMatrix& coupling) {
    const std::size_t m = contrib.developers.size();
    const std::size_t n = contrib.artifacts.size();
    std::vector<std::uint32_t> out(m * m, 0);
    // reach[b] = number of artifacts a with f(i, a) and phi(a, b); then the
    // (i, j) entry is the sum of reach over j's artifacts.
    std::vector<std::uint32_t> reach(n);
    for (std::size_t i = 0; i < m; ++i) {
        const auto fi = contrib.f.row(i);
        for (std::size_t b = 0; b < n; ++b) {
            reach[b] = static_cast<std::uint32_t>(
                kernels::popcount_and(fi, coupling.phi.row(b)));
        }
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t acc = 0;
            contrib.f.for_each_set(j, [&](std::size_t b) { acc += reach[b]; });
            out[i * m + j] = static_cast<std::uint32_t>(acc);
        }
    }
    return out;
}

DeveloperNetwork build_network(const ContributionMatrix& contrib,
                               const CouplingMatrix& coupling) {
    if (coupling.artifacts != contrib.artifacts) {
        throw std::invalid_argument("build_network: artifact order mismatch");
    }
    DeveloperNetwork net;
    net.developers = contrib.developers;
    net.weights = coordination_product(contrib, coupling);
    const std::size_t m = net.developers.size();
    for (std::size_t i = 0; i < m; ++i) net.weights[i * m + i] = 0;
    return net;
}

BitMatrix DeveloperNetwork::binarized() const {
    const std::size_t m = developers.size();
    BitMatrix adj(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (weight(i, j) > 0) adj.set_sym(i, j);
        }
    }
    return adj;
}

std::vector<int> DeveloperNetwork::degrees() const {
    const std::size_t m = developers.size();
    std::vector<int> deg(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j != i && weight(i, j) > 0) ++deg[i];
        }
    }
    return deg;
}

std::size_t DeveloperNetwork::edge_count() const {
    const std::size_t m = developers.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (weight(i, j) > 0) ++count;
        }
    }
    return count;
}

}  // namespace coordnet
