// Compiled-in copy of data/stopwords.txt; a unit test keeps the two in
// sync. 214 entries, lowercase alphanumeric (collapsed contractions).
#include "moodflow/textnorm.hpp"

namespace moodflow {

namespace {

const char* const kBuiltinStopwords[] = {
    "i",    "me",    "my",    "myself",    "we",    "us",
    "our",    "ours",    "ourselves",    "you",    "your",    "yours",
    "yourself",    "yourselves",    "he",    "him",    "his",    "himself",
    "she",    "her",    "hers",    "herself",    "it",    "its",
    "itself",    "they",    "them",    "their",    "theirs",    "themselves",
    "what",    "which",    "who",    "whom",    "this",    "that",
    "these",    "those",    "am",    "is",    "are",    "was",
    "were",    "be",    "been",    "being",    "have",    "has",
    "had",    "having",    "do",    "does",    "did",    "doing",
    "can",    "will",    "would",    "should",    "could",    "ought",
    "im",    "youre",    "hes",    "shes",    "theyre",    "ive",
    "youve",    "weve",    "theyve",    "id",    "youd",    "hed",
    "theyd",    "youll",    "theyll",    "isnt",    "arent",    "wasnt",
    "werent",    "hasnt",    "havent",    "hadnt",    "doesnt",    "dont",
    "didnt",    "wont",    "wouldnt",    "shant",    "shouldnt",    "cant",
    "cannot",    "couldnt",    "mustnt",    "lets",    "thats",    "whos",
    "whats",    "heres",    "theres",    "whens",    "wheres",    "whys",
    "hows",    "a",    "an",    "the",    "and",    "but",
    "if",    "or",    "nor",    "because",    "as",    "until",
    "while",    "since",    "though",    "although",    "whether",    "of",
    "at",    "by",    "for",    "with",    "about",    "against",
    "between",    "into",    "through",    "during",    "before",    "after",
    "above",    "below",    "to",    "from",    "up",    "down",
    "in",    "out",    "on",    "off",    "over",    "under",
    "upon",    "onto",    "within",    "without",    "along",    "across",
    "around",    "behind",    "beyond",    "near",    "via",    "again",
    "further",    "then",    "once",    "here",    "there",    "when",
    "where",    "why",    "how",    "all",    "any",    "both",
    "each",    "few",    "more",    "most",    "other",    "some",
    "such",    "no",    "not",    "only",    "own",    "same",
    "so",    "than",    "too",    "very",    "just",    "now",
    "also",    "even",    "ever",    "never",    "still",    "yet",
    "soon",    "already",    "much",    "many",    "every",    "another",
    "go",    "goes",    "going",    "gone",    "went",    "get",
    "gets",    "getting",    "got",    "anyone",    "anything",    "someone",
    "nothing",    "nobody",    "everyone",    "everything",
};

} // namespace

const StopwordList& StopwordList::builtin() {
    static const StopwordList list = [] {
        StopwordList l;
        l.source_id = "builtin:english-214";
        for (const char* w : kBuiltinStopwords) l.entries.insert(w);
        return l;
    }();
    return list;
}

} // namespace moodflow
