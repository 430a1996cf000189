#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "moodflow/types.hpp"

namespace moodflow {

/// Six stemmed adjective sets keyed by mood dimension. Immutable after
/// load; shareable across scoring workers without synchronization.
struct Lexicon {
    std::string name;
    std::string version;

    /// Per dimension: stem -> raw source forms (in file order). The sorted
    /// map fixes the order of saves and reports. Invariant: each stem
    /// equals porter_stem(clean_token(raw)) of every recorded raw form
    /// (raw list may be empty when loaded from a pre-stemmed file).
    std::array<std::map<std::string, std::vector<std::string>>, kNumDimensions>
        entries;

    /// Raw adjectives listed in the source, before stemming merged any.
    std::size_t raw_term_count = 0;

    const std::unordered_set<std::string>& stems(MoodDimension d) const {
        return stem_sets_[static_cast<int>(d)];
    }
    bool dimension_contains(MoodDimension d, std::string_view stem) const {
        return stems(d).count(std::string(stem)) != 0;
    }
    std::size_t stem_count() const;

    /// Call after mutating `entries` directly (tests do).
    void rebuild_stem_sets();

private:
    std::array<std::unordered_set<std::string>, kNumDimensions> stem_sets_;
};

/// Format: '#' comments; directives @name <v>, @version <v>, @stemmed;
/// section headers [tension] .. [confusion]; one raw adjective per line.
/// Under @stemmed, lines read "stem" or "stem: raw1, raw2" and the stem is
/// taken verbatim (canonical save output). Errors carry line numbers.
Lexicon parse_lexicon(std::istream& in, const std::string& source_name);
Lexicon load_lexicon(const std::string& path);

/// Canonical form: @name/@version when set, @stemmed, sections in fixed
/// dimension order, entries sorted by stem with raw forms after ':'.
/// parse_lexicon(save_lexicon(L)) == L, and a second save is byte-identical.
void save_lexicon(const Lexicon& lex, std::ostream& out);
void save_lexicon(const Lexicon& lex, const std::string& path);

struct OverlapEntry {
    std::string stem;
    std::vector<MoodDimension> dimensions; // ascending index, size >= 2
};

/// Stems present in two or more dimensions, sorted by stem.
std::vector<OverlapEntry> overlap_report(const Lexicon& lex);

} // namespace moodflow
