#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moodflow/lexicon.hpp"
#include "moodflow/series.hpp"
#include "moodflow/textnorm.hpp"
#include "moodflow/types.hpp"

namespace moodflow {

enum class CorpusFormat { Auto, Jsonl, Tsv };

/// Record funnel. Every non-blank input line lands in exactly one bucket;
/// conserved() states the invariant reports rely on.
struct RunDiagnostics {
    std::uint64_t total = 0;
    std::uint64_t malformed = 0;
    std::uint64_t candidate_rejected = 0;
    std::uint64_t zero_vector_dropped = 0;
    std::uint64_t out_of_range = 0; // 0 unless an explicit range was set
    std::uint64_t scored_retained = 0;

    std::uint64_t candidate_retained() const {
        return total - malformed - candidate_rejected;
    }
    bool conserved() const {
        return total == malformed + candidate_rejected + zero_vector_dropped +
                            out_of_range + scored_retained;
    }
};

struct RunConfig {
    std::vector<std::string> corpus_paths;
    std::string lexicon_path;
    std::string stopword_path;            // empty: builtin list
    CorpusFormat format = CorpusFormat::Auto;
    std::optional<DateRange> range;       // empty: derived from the data
    int k = 30;
    double threshold = 0.05;
    int workers = 1;
    std::string output_dir;
    std::string periods;                  // "", "DJIA" or "WTI"
    SeriesKind compare_kind = SeriesKind::VarNorm;
    SeriesKind correlate_kind = SeriesKind::ZScore;
};

/// Parses one corpus line. `format` must be resolved (not Auto).
/// nullopt = malformed (caller tallies; never silently dropped).
std::optional<RawMessage> parse_record_line(const std::string& line,
                                            CorpusFormat format);

/// Streams records of one file in order, calling fn for each well-formed
/// one. Returns the malformed count; total_lines (when given) receives the
/// number of non-blank lines. Memory stays O(1) in the file size.
std::uint64_t for_each_record(const std::string& path, CorpusFormat format,
                              const std::function<void(RawMessage&&)>& fn,
                              std::uint64_t* total_lines = nullptr);

struct CorpusScoreResult {
    DailyAggregator aggregator;
    std::uint64_t total = 0;
    std::uint64_t malformed = 0;
    std::uint64_t candidate_rejected = 0;
    std::uint64_t zero_vector_dropped = 0;
};

/// Scores every record of the given files on `workers` threads. Lines are
/// chunked; workers parse, filter and score chunks independently (pure
/// functions); results are folded strictly in input order, so the output
/// is byte-identical for any worker count and for any split of the same
/// line stream across files. Peak memory is O(chunks in flight + days).
CorpusScoreResult score_corpus(const std::vector<std::string>& paths,
                               CorpusFormat format, int workers,
                               const StopwordList& stopwords,
                               const Lexicon& lexicon,
                               const PatternSet& patterns);

struct RunOutputs {
    MoodSeries raw;
    MoodSeries zscore;
    MoodSeries varnorm;
    RunDiagnostics diagnostics;
    std::vector<std::string> files_written;
};

/// filter -> score -> aggregate -> normalize -> stats, writing raw.csv,
/// zscore.csv, varnorm.csv, correlation.csv, comparisons.csv (when periods
/// are configured) and diagnostics.txt into output_dir. Re-running with
/// identical inputs rewrites identical bytes. On failure, files already
/// written by this run are removed before the error propagates.
RunOutputs run_pipeline(const RunConfig& config);

/// Funnel + per-day counts in the diagnostics.txt layout.
void write_diagnostics(const RunDiagnostics& diag, const MoodSeries& raw,
                       std::ostream& out);

} // namespace moodflow
