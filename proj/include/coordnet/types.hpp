#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace coordnet {

struct DeveloperId {
    std::string canonical_key;  // normalized email, lowercased; never empty
    std::string display_name;

    friend bool operator==(const DeveloperId& a, const DeveloperId& b) {
        return a.canonical_key == b.canonical_key;
    }
};

// Lowercases and trims an author email into the canonical identity key.
std::string canonical_email(std::string_view raw);

enum class ArtifactKind : std::uint8_t { function, file };

inline constexpr const char* kFileSentinelName = "<file>";

struct ArtifactId {
    std::string file_path;
    std::string artifact_name;  // function name, or kFileSentinelName
    ArtifactKind kind = ArtifactKind::function;

    friend bool operator==(const ArtifactId& a, const ArtifactId& b) {
        return a.kind == b.kind && a.file_path == b.file_path &&
               a.artifact_name == b.artifact_name;
    }
    friend auto operator<=>(const ArtifactId& a, const ArtifactId& b) = default;
};

struct ArtifactIdHash {
    std::size_t operator()(const ArtifactId& a) const {
        std::size_t h = std::hash<std::string>{}(a.file_path);
        h ^= std::hash<std::string>{}(a.artifact_name) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(a.kind) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }
};

struct Contribution {
    ArtifactId artifact;
    std::optional<std::string> text;  // post-commit body including comments
};

struct CommitRecord {
    std::string commit_id;
    DeveloperId author;
    std::int64_t timestamp = 0;  // seconds since epoch, UTC
    std::vector<Contribution> contributions;  // unique artifacts, non-empty
};

}  // namespace coordnet
