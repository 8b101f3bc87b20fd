#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace coordnet::text {

// Splits identifiers and prose into lowercase tokens: breaks on
// non-alphanumeric characters, underscores, and letter-case transitions
// ("getUser" and "get_user" both yield {"get", "user"}). Tokens shorter
// than two characters and pure numbers are dropped.
std::vector<std::string> tokenize(std::string_view input);

// Porter stemming algorithm (1980), original rule set.
// Expects a lowercase ASCII word.
std::string porter_stem(std::string_view word);

// Built-in stopword list: common English words plus C-family keywords.
const std::unordered_set<std::string>& default_stopwords();

// One word per line; '#' starts a comment. Returned set replaces the
// default list.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

// Stopword removal followed by stemming.
std::vector<std::string> preprocess(const std::vector<std::string>& tokens,
                                    const std::unordered_set<std::string>& stopwords);

}  // namespace coordnet::text
