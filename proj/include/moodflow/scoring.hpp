#pragma once

#include <optional>

#include "moodflow/lexicon.hpp"
#include "moodflow/textnorm.hpp"
#include "moodflow/types.hpp"

namespace moodflow {

/// Component i = number of DISTINCT stems of `terms` found in dimension i.
/// A stem repeated in the message counts once; a stem present in several
/// dimensions counts in each of them.
MoodVector score(const TermSet& terms, const Lexicon& lexicon);

/// m / ||m||, or nullopt when ||m|| = 0 (no mood signal; defined outcome,
/// not an error).
std::optional<MoodVector> unit_normalize(const MoodVector& raw);

/// Candidate filter -> tokenize -> score -> unit normalize. nullopt when
/// the message is not a mood candidate or matched nothing. match_count is
/// the sum of raw components (a shared stem counts once per dimension).
std::optional<ScoredMessage> score_message(const RawMessage& msg,
                                           const StopwordList& stopwords,
                                           const Lexicon& lexicon,
                                           const PatternSet& patterns);
std::optional<ScoredMessage> score_message(const RawMessage& msg,
                                           const StopwordList& stopwords,
                                           const Lexicon& lexicon);

} // namespace moodflow
