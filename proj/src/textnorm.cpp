#include "moodflow/textnorm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "moodflow/error.hpp"
#include "moodflow/porter.hpp"

namespace moodflow {

namespace {

inline bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

inline bool is_ascii_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Case-insensitive substring search over raw bytes.
bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.size() > haystack.size()) return false;
    const std::size_t last = haystack.size() - needle.size();
    for (std::size_t i = 0; i <= last; ++i) {
        std::size_t j = 0;
        while (j < needle.size() &&
               ascii_lower(haystack[i + j]) == needle[j])
            ++j;
        if (j == needle.size()) return true;
    }
    return false;
}

template <typename Fn>
void for_each_raw_token(std::string_view text, Fn&& fn) {
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_ascii_space(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && !is_ascii_space(text[i])) ++i;
        fn(text.substr(start, i - start));
    }
}

} // namespace

std::string clean_token(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw)
        if (is_ascii_alnum(c)) out.push_back(ascii_lower(c));
    return out;
}

TermSet tokenize(std::string_view text, const StopwordList& stopwords) {
    TermSet result;
    for_each_raw_token(text, [&](std::string_view raw) {
        ++result.source_token_count;
        std::string cleaned = clean_token(raw);
        if (cleaned.empty()) return;
        if (stopwords.contains(cleaned)) return;
        result.terms.push_back(porter_stem(cleaned));
    });
    return result;
}

bool is_mood_candidate(std::string_view text, const PatternSet& patterns) {
    if (contains_ci(text, "http:") || contains_ci(text, "www.")) return false;
    bool hit = false;
    for_each_raw_token(text, [&](std::string_view raw) {
        if (hit) return;
        std::string cleaned = clean_token(raw);
        if (cleaned.empty()) return;
        for (const auto& p : patterns.patterns) {
            if (p.mode == PatternMode::Token) {
                if (cleaned == p.text) { hit = true; return; }
            } else {
                if (cleaned.find(p.text) != std::string::npos) {
                    hit = true;
                    return;
                }
            }
        }
    });
    return hit;
}

bool is_mood_candidate(std::string_view text) {
    return is_mood_candidate(text, PatternSet::builtin());
}

const PatternSet& PatternSet::builtin() {
    static const PatternSet set = {{
        {"feel", PatternMode::Substring},
        {"im", PatternMode::Token},
        {"am", PatternMode::Token},
        {"being", PatternMode::Token},
        {"be", PatternMode::Token},
    }};
    return set;
}

StopwordList StopwordList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_data("cannot open stopword file: " + path);
    StopwordList list;
    list.source_id = path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t");
        std::string word = line.substr(b, e - b + 1);
        for (char c : word) {
            if (!is_ascii_alnum(c) || (c >= 'A' && c <= 'Z'))
                throw_data(path + ":" + std::to_string(lineno) +
                           ": stopword entries must be lowercase alphanumeric, got \"" +
                           word + "\"");
        }
        list.entries.insert(std::move(word));
    }
    return list;
}

} // namespace moodflow
