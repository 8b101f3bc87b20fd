#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "coordnet/lsi.hpp"
#include "coordnet/network.hpp"
#include "coordnet/types.hpp"

namespace coordnet {

inline constexpr std::int64_t kSecondsPerDay = 86400;

struct WindowSpec {
    std::int64_t window_sec = 90 * kSecondsPerDay;
    std::int64_t step_sec = 45 * kSecondsPerDay;

    static WindowSpec days(int window_days, int step_days) {
        return {window_days * kSecondsPerDay, step_days * kSecondsPerDay};
    }
    // Appendix-B style non-overlapping windows: step == window.
    WindowSpec non_overlapping() const { return {window_sec, window_sec}; }
};

struct Window {
    int index = 0;
    std::int64_t t_start = 0;
    std::int64_t t_end = 0;   // closed interval [t_start, t_end]
    bool partial = false;     // t_end exceeds the last commit time
    std::vector<const CommitRecord*> commits;
};

// Slices an ordered commit stream into windows n = 0..N where N is the last
// index whose start does not exceed the final commit time. Interval
// membership is closed on both ends; commits exactly on a boundary belong to
// both adjacent windows. Empty windows are retained.
std::vector<Window> make_windows(const std::vector<CommitRecord>& stream,
                                 const WindowSpec& spec);

struct CouplingConfig {
    double threshold = 0.65;
    RankPolicy rank_policy;
    std::unordered_set<std::string> stopwords;  // empty -> built-in default
};

// Per-window construction: corpus of artifacts touched in the window (text
// from the last commit touching each), Appendix-A coupling, then the triple
// product. Corpora with fewer than two documents or no usable tokens fall
// back to identity coupling.
DeveloperNetwork build_window_network(const Window& window, const CouplingConfig& config);

struct WindowResult {
    int window_id = 0;
    DeveloperNetwork network;      // zero developers for an empty window
    std::optional<std::string> error;
};

// Builds every window's network; failures are captured per window and do not
// abort the remaining ones. Output is ordered by window index regardless of
// scheduling.
std::vector<WindowResult> stream_networks(
    const std::vector<Window>& windows,
    const std::function<DeveloperNetwork(const Window&)>& build_one,
    unsigned threads = 1);

}  // namespace coordnet
