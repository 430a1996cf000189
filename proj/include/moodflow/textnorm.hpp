#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "moodflow/date.hpp"

namespace moodflow {

/// One input message. `day` is derived from the timestamp at parse time;
/// the original timestamp text is kept for per-message dumps.
struct RawMessage {
    std::string timestamp_text;
    Date day;
    std::string text;
};

struct StopwordList {
    std::unordered_set<std::string> entries;
    std::string source_id;

    /// Compiled-in default list (exactly 214 entries). data/stopwords.txt
    /// ships the same list for editing; a test pins the two together.
    static const StopwordList& builtin();

    /// One lowercase word per line, '#' comments, blank lines ignored.
    static StopwordList load(const std::string& path);

    bool contains(std::string_view word) const {
        return entries.count(std::string(word)) != 0;
    }
    std::size_t size() const { return entries.size(); }
};

/// Cleaned, stemmed tokens of one text, in order of appearance.
/// Duplicates are kept; scoring applies set semantics itself.
struct TermSet {
    std::vector<std::string> terms;
    std::uint32_t source_token_count = 0; // whitespace-delimited raw tokens
};

enum class PatternMode { Substring, Token };

/// Retention pattern, stored in normalized form (lowercase, alphanumeric
/// only). Token mode compares against whole cleaned tokens; substring mode
/// searches within each cleaned token.
struct RetentionPattern {
    std::string text;
    PatternMode mode;
};

struct PatternSet {
    std::vector<RetentionPattern> patterns;

    /// feel (substring) + im, am, being, be (whole token). "I'm" and "Im"
    /// collapse to the same token "im" once punctuation is removed.
    static const PatternSet& builtin();
};

/// Lowercase + strip every non-ASCII-alphanumeric byte. Exposed because
/// stopword comparison and pattern matching both apply it.
std::string clean_token(std::string_view raw);

/// whitespace split -> per-token cleanup -> drop empties -> stopword
/// removal (pre-stem form) -> Porter stem. Deterministic and pure.
TermSet tokenize(std::string_view text, const StopwordList& stopwords);

/// True iff a retention pattern fires and the text contains neither
/// "http:" nor "www." (case-insensitive). Empty text is never a candidate.
bool is_mood_candidate(std::string_view text, const PatternSet& patterns);
bool is_mood_candidate(std::string_view text);

} // namespace moodflow
