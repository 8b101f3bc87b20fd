#include "coordnet/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace coordnet::text {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void emit(std::string& tok, std::vector<std::string>& out) {
    if (tok.size() < 2) {
        tok.clear();
        return;
    }
    if (std::all_of(tok.begin(), tok.end(), is_digit)) {
        tok.clear();
        return;
    }
    for (char& c : tok) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.push_back(std::move(tok));
    tok.clear();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view input) {
    std::vector<std::string> out;
    std::string tok;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const char c = input[i];
        if (!is_alnum(c)) {
            emit(tok, out);
            continue;
        }
        if (!tok.empty()) {
            const char prev = tok.back();
            // camelCase boundary: aB, 9B, and the HTMLParser pattern (last
            // upper of a run followed by a lower starts a new word).
            const bool case_break =
                (is_upper(c) && (is_lower(prev) || is_digit(prev))) ||
                (is_upper(prev) && is_upper(c) && i + 1 < input.size() && is_lower(input[i + 1]));
            if (case_break) emit(tok, out);
        }
        tok.push_back(c);
    }
    emit(tok, out);
    return out;
}

// ---------------------------------------------------------------------------
// Porter stemmer
// ---------------------------------------------------------------------------

namespace {

class Porter {
public:
    explicit Porter(std::string_view word) : w_(word) {}

    std::string run() {
        if (w_.size() <= 2) return w_;
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return w_;
    }

private:
    std::string w_;

    static bool is_vowel_at(const std::string& s, std::size_t i) {
        const char c = s[i];
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return true;
        // y counts as a vowel when preceded by a consonant
        if (c == 'y' && i > 0) return !is_vowel_at(s, i - 1);
        return false;
    }

    // Measure m of the prefix s[0..len): [C](VC)^m[V]
    static int measure(const std::string& s, std::size_t len) {
        int m = 0;
        bool prev_vowel = false;
        for (std::size_t i = 0; i < len; ++i) {
            const bool v = is_vowel_at(s, i);
            if (prev_vowel && !v) ++m;
            prev_vowel = v;
        }
        return m;
    }

    static bool contains_vowel(const std::string& s, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            if (is_vowel_at(s, i)) return true;
        }
        return false;
    }

    static bool double_consonant(const std::string& s, std::size_t len) {
        if (len < 2) return false;
        if (s[len - 1] != s[len - 2]) return false;
        return !is_vowel_at(s, len - 1);
    }

    // *o: ends cvc where the final consonant is not w, x, or y
    static bool ends_cvc(const std::string& s, std::size_t len) {
        if (len < 3) return false;
        const char last = s[len - 1];
        if (last == 'w' || last == 'x' || last == 'y') return false;
        return !is_vowel_at(s, len - 3) && is_vowel_at(s, len - 2) && !is_vowel_at(s, len - 1);
    }

    bool ends_with(std::string_view suffix) const {
        return w_.size() >= suffix.size() &&
               std::equal(suffix.rbegin(), suffix.rend(), w_.rbegin());
    }

    std::size_t stem_len(std::string_view suffix) const { return w_.size() - suffix.size(); }

    void replace_suffix(std::string_view suffix, std::string_view repl) {
        w_.resize(w_.size() - suffix.size());
        w_.append(repl);
    }

    struct Rule {
        std::string_view suffix;
        std::string_view repl;
        int min_measure;  // rule fires only if m(stem) > min_measure
    };

    // Applies the longest matching suffix rule; per Porter, once a suffix
    // matches, its condition decides and no other rule is attempted.
    bool apply_rules(std::initializer_list<Rule> rules) {
        const Rule* best = nullptr;
        for (const Rule& r : rules) {
            if (ends_with(r.suffix) && (!best || r.suffix.size() > best->suffix.size())) {
                best = &r;
            }
        }
        if (!best) return false;
        if (measure(w_, stem_len(best->suffix)) > best->min_measure) {
            replace_suffix(best->suffix, best->repl);
            return true;
        }
        return false;
    }

    void step1a() {
        if (ends_with("sses")) {
            replace_suffix("sses", "ss");
        } else if (ends_with("ies")) {
            replace_suffix("ies", "i");
        } else if (ends_with("ss")) {
            // keep
        } else if (ends_with("s")) {
            replace_suffix("s", "");
        }
    }

    void step1b() {
        if (ends_with("eed")) {
            if (measure(w_, stem_len("eed")) > 0) replace_suffix("eed", "ee");
            return;
        }
        bool stripped = false;
        if (ends_with("ed") && contains_vowel(w_, stem_len("ed"))) {
            replace_suffix("ed", "");
            stripped = true;
        } else if (ends_with("ing") && contains_vowel(w_, stem_len("ing"))) {
            replace_suffix("ing", "");
            stripped = true;
        }
        if (!stripped) return;
        if (ends_with("at") || ends_with("bl") || ends_with("iz")) {
            w_.push_back('e');
        } else if (double_consonant(w_, w_.size())) {
            const char last = w_.back();
            if (last != 'l' && last != 's' && last != 'z') w_.pop_back();
        } else if (measure(w_, w_.size()) == 1 && ends_cvc(w_, w_.size())) {
            w_.push_back('e');
        }
    }

    void step1c() {
        if (ends_with("y") && contains_vowel(w_, stem_len("y"))) {
            w_.back() = 'i';
        }
    }

    void step2() {
        apply_rules({
            {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
            {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
            {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
            {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
            {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
            {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
            {"iviti", "ive", 0},   {"biliti", "ble", 0},
        });
    }

    void step3() {
        apply_rules({
            {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
            {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0},
            {"ness", "", 0},
        });
    }

    void step4() {
        static constexpr std::string_view suffixes[] = {
            "ement", "ance", "ence", "able", "ible", "ment", "ent", "ant",
            "ism",   "ate",  "iti",  "ous",  "ive",  "ize",  "ion", "al",
            "er",    "ic",   "ou",
        };
        const std::string_view* best = nullptr;
        for (const auto& s : suffixes) {
            if (ends_with(s) && (!best || s.size() > best->size())) best = &s;
        }
        if (!best) return;
        const std::size_t len = stem_len(*best);
        if (*best == "ion" && !(len > 0 && (w_[len - 1] == 's' || w_[len - 1] == 't'))) {
            return;
        }
        if (measure(w_, len) > 1) replace_suffix(*best, "");
    }

    void step5a() {
        if (!ends_with("e")) return;
        const std::size_t len = stem_len("e");
        const int m = measure(w_, len);
        if (m > 1 || (m == 1 && !ends_cvc(w_, len))) {
            replace_suffix("e", "");
        }
    }

    void step5b() {
        if (w_.size() >= 2 && w_.back() == 'l' && double_consonant(w_, w_.size()) &&
            measure(w_, w_.size()) > 1) {
            w_.pop_back();
        }
    }
};

}  // namespace

std::string porter_stem(std::string_view word) { return Porter(word).run(); }

namespace {

constexpr const char* kEnglishStopwords[] = {
    "about", "above", "after", "again", "all", "also", "an", "and", "any", "are",
    "as", "at", "be", "because", "been", "before", "being", "below", "between",
    "both", "but", "by", "can", "cannot", "could", "did", "do", "does", "doing",
    "down", "during", "each", "few", "for", "from", "further", "had", "has",
    "have", "having", "he", "her", "here", "hers", "him", "his", "how", "in",
    "into", "is", "it", "its", "itself", "just", "me", "more", "most", "my",
    "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or", "other",
    "our", "ours", "out", "over", "own", "same", "she", "should", "so", "some",
    "such", "than", "that", "the", "their", "theirs", "them", "then", "there",
    "these", "they", "this", "those", "through", "to", "too", "under", "until",
    "up", "very", "was", "we", "were", "what", "when", "where", "which", "while",
    "who", "whom", "why", "will", "with", "would", "you", "your", "yours",
};

// Keywords and ubiquitous identifiers of C-family languages; they carry no
// domain meaning inside function bodies.
constexpr const char* kCodeStopwords[] = {
    "auto", "bool", "break", "case", "char", "class", "const", "continue",
    "default", "define", "delete", "do", "double", "elif", "else", "endif",
    "enum", "extern", "false", "float", "for", "goto", "if", "ifdef", "ifndef",
    "include", "inline", "int", "long", "namespace", "new", "null", "nullptr",
    "operator", "pragma", "private", "protected", "public", "register",
    "restrict", "return", "short", "signed", "sizeof", "static", "struct",
    "switch", "template", "this", "true", "typedef", "typename", "undef",
    "union", "unsigned", "using", "virtual", "void", "volatile", "while",
};

}  // namespace

const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> set = [] {
        std::unordered_set<std::string> s;
        for (const char* w : kEnglishStopwords) s.insert(w);
        for (const char* w : kCodeStopwords) s.insert(w);
        return s;
    }();
    return set;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path.string());
    std::unordered_set<std::string> set;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string word;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            }
        }
        if (!word.empty()) set.insert(std::move(word));
    }
    return set;
}

std::vector<std::string> preprocess(const std::vector<std::string>& tokens,
                                    const std::unordered_set<std::string>& stopwords) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (stopwords.contains(tok)) continue;
        out.push_back(porter_stem(tok));
    }
    return out;
}

}  // namespace coordnet::text
