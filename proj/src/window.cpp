#include "coordnet/window.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "coordnet/parallel.hpp"
#include "coordnet/text.hpp"

namespace coordnet {

std::vector<Window> make_windows(const std::vector<CommitRecord>& stream,
                                 const WindowSpec& spec) {
    if (stream.empty()) throw std::invalid_argument("make_windows: empty stream");
    if (spec.window_sec <= 0 || spec.step_sec <= 0 || spec.step_sec > spec.window_sec) {
        throw std::invalid_argument("make_windows: invalid window spec");
    }
    for (std::size_t i = 1; i < stream.size(); ++i) {
        if (stream[i].timestamp < stream[i - 1].timestamp) {
            throw std::invalid_argument("make_windows: stream not time-ordered");
        }
    }
    const std::int64_t t0 = stream.front().timestamp;
    const std::int64_t t_last = stream.back().timestamp;
    const auto last_index = static_cast<int>((t_last - t0) / spec.step_sec);

    std::vector<Window> windows;
    windows.reserve(static_cast<std::size_t>(last_index) + 1);
    for (int n = 0; n <= last_index; ++n) {
        Window w;
        w.index = n;
        w.t_start = t0 + static_cast<std::int64_t>(n) * spec.step_sec;
        w.t_end = w.t_start + spec.window_sec;
        w.partial = w.t_end > t_last;
        const auto lo = std::lower_bound(
            stream.begin(), stream.end(), w.t_start,
            [](const CommitRecord& c, std::int64_t t) { return c.timestamp < t; });
        for (auto it = lo; it != stream.end() && it->timestamp <= w.t_end; ++it) {
            w.commits.push_back(&*it);
        }
        windows.push_back(std::move(w));
    }
    return windows;
}

DeveloperNetwork build_window_network(const Window& window, const CouplingConfig& config) {
    if (window.commits.empty()) {
        DeveloperNetwork empty;
        empty.window_id = window.index;
        return empty;
    }
    // Window corpus: artifacts in first-touch order, text from the last
    // commit in the window that touched each artifact.
    std::vector<ArtifactId> artifacts;
    std::unordered_map<ArtifactId, std::size_t, ArtifactIdHash> index;
    std::vector<std::optional<std::string>> texts;
    for (const CommitRecord* c : window.commits) {
        for (const Contribution& contrib : c->contributions) {
            auto [it, inserted] = index.try_emplace(contrib.artifact, artifacts.size());
            if (inserted) {
                artifacts.push_back(contrib.artifact);
                texts.emplace_back();
            }
            if (contrib.text) texts[it->second] = contrib.text;
        }
    }

    const auto& stopwords =
        config.stopwords.empty() ? text::default_stopwords() : config.stopwords;
    std::vector<std::pair<ArtifactId, std::vector<std::string>>> docs;
    docs.reserve(artifacts.size());
    bool any_tokens = false;
    for (std::size_t i = 0; i < artifacts.size(); ++i) {
        std::vector<std::string> tokens;
        if (texts[i]) {
            tokens = text::preprocess(text::tokenize(*texts[i]), stopwords);
        }
        any_tokens = any_tokens || !tokens.empty();
        docs.emplace_back(artifacts[i], std::move(tokens));
    }

    CouplingMatrix coupling;
    if (artifacts.size() < 2 || !any_tokens) {
        coupling = identity_coupling(artifacts);
    } else {
        const TermDocumentMatrix td = build_tfidf(docs);
        bool any_weight = false;
        for (double w : td.weights) {
            if (w != 0.0) {
                any_weight = true;
                break;
            }
        }
        if (!any_weight) {
            // every term ubiquitous: no discriminative vocabulary
            coupling = identity_coupling(artifacts);
        } else {
            const LatentSpace space = project_lsi(td, config.rank_policy);
            coupling = couple(space, artifacts, config.threshold);
        }
    }

    DeveloperNetwork net = build_network(build_contrib(window.commits), coupling);
    net.window_id = window.index;
    return net;
}

std::vector<WindowResult> stream_networks(
    const std::vector<Window>& windows,
    const std::function<DeveloperNetwork(const Window&)>& build_one,
    unsigned threads) {
    std::vector<WindowResult> results(windows.size());
    parallel_for(windows.size(), threads, [&](std::size_t i) {
        WindowResult& r = results[i];
        r.window_id = windows[i].index;
        try {
            r.network = build_one(windows[i]);
            r.network.window_id = windows[i].index;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    });
    return results;
}

}  // namespace coordnet
