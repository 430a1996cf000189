#include "moodflow/scoring.hpp"

#include <cmath>
#include <unordered_set>

namespace moodflow {

MoodVector score(const TermSet& terms, const Lexicon& lexicon) {
    MoodVector m;
    m.kind = VectorKind::RawCounts;
    std::unordered_set<std::string_view> seen;
    seen.reserve(terms.terms.size());
    for (const std::string& stem : terms.terms) {
        if (!seen.insert(stem).second) continue;
        for (int d = 0; d < kNumDimensions; ++d)
            if (lexicon.stems(static_cast<MoodDimension>(d)).count(stem))
                m.component(d) += 1.0;
    }
    return m;
}

std::optional<MoodVector> unit_normalize(const MoodVector& raw) {
    MoodVector unit;
    if (!kernels::active_ops().unit6(unit.lanes, raw.lanes)) return std::nullopt;
    unit.kind = VectorKind::Unit;
    return unit;
}

std::optional<ScoredMessage> score_message(const RawMessage& msg,
                                           const StopwordList& stopwords,
                                           const Lexicon& lexicon,
                                           const PatternSet& patterns) {
    if (!is_mood_candidate(msg.text, patterns)) return std::nullopt;
    const TermSet terms = tokenize(msg.text, stopwords);
    const MoodVector raw = score(terms, lexicon);
    auto unit = unit_normalize(raw);
    if (!unit) return std::nullopt;

    std::uint32_t matches = 0;
    for (int d = 0; d < kNumDimensions; ++d)
        matches += static_cast<std::uint32_t>(raw.component(d));
    return ScoredMessage{msg.day, *unit, matches};
}

std::optional<ScoredMessage> score_message(const RawMessage& msg,
                                           const StopwordList& stopwords,
                                           const Lexicon& lexicon) {
    return score_message(msg, stopwords, lexicon, PatternSet::builtin());
}

} // namespace moodflow
