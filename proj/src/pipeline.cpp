#include "moodflow/pipeline.hpp"

#include <condition_variable>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "moodflow/analysis.hpp"
#include "moodflow/error.hpp"
#include "moodflow/scoring.hpp"
#include "moodflow/stats.hpp"

namespace moodflow {

namespace {

CorpusFormat sniff_format(const std::string& first_line) {
    return first_line.front() == '{' ? CorpusFormat::Jsonl : CorpusFormat::Tsv;
}

} // namespace

std::optional<RawMessage> parse_record_line(const std::string& line,
                                            CorpusFormat format) {
    RawMessage msg;
    if (format == CorpusFormat::Jsonl) {
        const auto obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) return std::nullopt;
        const auto ts = obj.find("ts");
        const auto text = obj.find("text");
        if (ts == obj.end() || text == obj.end() || !ts->is_string() ||
            !text->is_string())
            return std::nullopt;
        msg.timestamp_text = ts->get<std::string>();
        msg.text = text->get<std::string>();
    } else {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) return std::nullopt;
        msg.timestamp_text = line.substr(0, tab);
        msg.text = line.substr(tab + 1);
    }
    const auto day = Date::parse_timestamp(msg.timestamp_text);
    if (!day) return std::nullopt;
    msg.day = *day;
    return msg;
}

std::uint64_t for_each_record(const std::string& path, CorpusFormat format,
                              const std::function<void(RawMessage&&)>& fn,
                              std::uint64_t* total_lines) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("cannot open corpus file: " + path);
    std::uint64_t malformed = 0, total = 0;
    std::string line;
    CorpusFormat resolved = format;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++total;
        if (resolved == CorpusFormat::Auto) resolved = sniff_format(line);
        auto msg = parse_record_line(line, resolved);
        if (!msg) {
            ++malformed;
            continue;
        }
        fn(std::move(*msg));
    }
    if (total_lines) *total_lines = total;
    return malformed;
}

namespace {

constexpr std::size_t kChunkLines = 16384;

struct Chunk {
    std::uint64_t id = 0;
    CorpusFormat format = CorpusFormat::Tsv; // resolved
    std::vector<std::string> lines;
};

struct ChunkOutcome {
    std::uint64_t total = 0;
    std::uint64_t malformed = 0;
    std::uint64_t candidate_rejected = 0;
    std::uint64_t zero_vector_dropped = 0;
    std::vector<ScoredMessage> scored; // line order within the chunk
};

ChunkOutcome score_chunk(const Chunk& chunk, const StopwordList& stopwords,
                         const Lexicon& lexicon, const PatternSet& patterns) {
    ChunkOutcome out;
    out.total = chunk.lines.size();
    for (const std::string& line : chunk.lines) {
        auto msg = parse_record_line(line, chunk.format);
        if (!msg) {
            ++out.malformed;
            continue;
        }
        if (!is_mood_candidate(msg->text, patterns)) {
            ++out.candidate_rejected;
            continue;
        }
        auto scored = score_message(*msg, stopwords, lexicon, patterns);
        if (!scored) {
            ++out.zero_vector_dropped;
            continue;
        }
        out.scored.push_back(*scored);
    }
    return out;
}

/// Fan-out with strictly ordered fan-in. The caller's thread submits
/// chunks and folds finished outcomes in submission order; workers only
/// compute. In-flight chunks are bounded, workers never block on output.
class OrderedScorer {
public:
    OrderedScorer(int workers, const StopwordList& stopwords,
                  const Lexicon& lexicon, const PatternSet& patterns,
                  std::function<void(ChunkOutcome&&)> fold)
        : stopwords_(stopwords), lexicon_(lexicon), patterns_(patterns),
          fold_(std::move(fold)),
          budget_(static_cast<std::size_t>(workers) * 4) {
        threads_.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            threads_.emplace_back([this] { worker(); });
    }

    void submit(Chunk&& chunk) {
        std::unique_lock lock(mu_);
        chunk.id = next_id_++;
        main_cv_.wait(lock, [&] {
            return inflight_unfolded() < budget_ || done_.count(next_fold_);
        });
        pending_.push_back(std::move(chunk));
        worker_cv_.notify_one();
        drain_ready(lock);
    }

    void finish() {
        {
            std::unique_lock lock(mu_);
            closed_ = true;
            worker_cv_.notify_all();
            while (next_fold_ < next_id_) {
                main_cv_.wait(lock,
                              [&] { return done_.count(next_fold_) != 0; });
                drain_ready(lock);
            }
        }
        for (auto& t : threads_) t.join();
    }

private:
    std::size_t inflight_unfolded() const { return next_id_ - next_fold_; }

    // Folds every outcome that is next in line. Runs the fold outside the
    // lock; order stays correct because only this (the caller's) thread
    // advances next_fold_.
    void drain_ready(std::unique_lock<std::mutex>& lock) {
        while (true) {
            auto it = done_.find(next_fold_);
            if (it == done_.end()) return;
            ChunkOutcome outcome = std::move(it->second);
            done_.erase(it);
            lock.unlock();
            fold_(std::move(outcome));
            lock.lock();
            ++next_fold_;
            main_cv_.notify_all();
        }
    }

    void worker() {
        while (true) {
            Chunk chunk;
            {
                std::unique_lock lock(mu_);
                worker_cv_.wait(lock,
                                [&] { return !pending_.empty() || closed_; });
                if (pending_.empty()) return;
                chunk = std::move(pending_.front());
                pending_.pop_front();
            }
            ChunkOutcome outcome =
                score_chunk(chunk, stopwords_, lexicon_, patterns_);
            {
                std::unique_lock lock(mu_);
                done_.emplace(chunk.id, std::move(outcome));
                main_cv_.notify_all();
            }
        }
    }

    const StopwordList& stopwords_;
    const Lexicon& lexicon_;
    const PatternSet& patterns_;
    std::function<void(ChunkOutcome&&)> fold_;
    const std::size_t budget_;

    std::mutex mu_;
    std::condition_variable worker_cv_, main_cv_;
    std::deque<Chunk> pending_;
    std::map<std::uint64_t, ChunkOutcome> done_;
    std::uint64_t next_id_ = 0;
    std::uint64_t next_fold_ = 0;
    bool closed_ = false;
    std::vector<std::thread> threads_;
};

} // namespace

CorpusScoreResult score_corpus(const std::vector<std::string>& paths,
                               CorpusFormat format, int workers,
                               const StopwordList& stopwords,
                               const Lexicon& lexicon,
                               const PatternSet& patterns) {
    if (workers < 1) throw_usage("worker count must be >= 1");
    if (paths.empty()) throw_usage("no corpus files given");

    CorpusScoreResult result;
    OrderedScorer scorer(workers, stopwords, lexicon, patterns,
                         [&](ChunkOutcome&& outcome) {
                             result.total += outcome.total;
                             result.malformed += outcome.malformed;
                             result.candidate_rejected +=
                                 outcome.candidate_rejected;
                             result.zero_vector_dropped +=
                                 outcome.zero_vector_dropped;
                             for (const ScoredMessage& m : outcome.scored)
                                 result.aggregator.add(m);
                         });

    for (const std::string& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw_data("cannot open corpus file: " + path);
        CorpusFormat resolved = format;
        Chunk chunk;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (resolved == CorpusFormat::Auto) resolved = sniff_format(line);
            chunk.format = resolved;
            chunk.lines.push_back(std::move(line));
            if (chunk.lines.size() >= kChunkLines) {
                scorer.submit(std::move(chunk));
                chunk = Chunk{};
                chunk.format = resolved;
            }
        }
        if (!chunk.lines.empty()) scorer.submit(std::move(chunk));
    }
    scorer.finish();
    return result;
}

void write_diagnostics(const RunDiagnostics& diag, const MoodSeries& raw,
                       std::ostream& out) {
    out << "total " << diag.total << "\n"
        << "malformed " << diag.malformed << "\n"
        << "candidate_rejected " << diag.candidate_rejected << "\n"
        << "zero_vector_dropped " << diag.zero_vector_dropped << "\n"
        << "out_of_range " << diag.out_of_range << "\n"
        << "scored_retained " << diag.scored_retained << "\n"
        << "conservation " << (diag.conserved() ? "ok" : "VIOLATED") << "\n";
    out << "daily_counts " << raw.slices.size() << "\n";
    for (const DailySlice& s : raw.slices)
        out << s.date.to_string() << " " << s.message_count << "\n";
}

RunOutputs run_pipeline(const RunConfig& config) {
    if (config.k < 1) throw_usage("window half-width k must be >= 1");
    if (!(config.threshold > 0.0 && config.threshold < 1.0))
        throw_usage("significance threshold must lie in (0,1)");
    if (config.output_dir.empty()) throw_usage("output directory not set");
    if (config.lexicon_path.empty()) throw_usage("lexicon path not set");

    StopwordList loaded_stopwords;
    const StopwordList* stopwords = &StopwordList::builtin();
    if (!config.stopword_path.empty()) {
        loaded_stopwords = StopwordList::load(config.stopword_path);
        stopwords = &loaded_stopwords;
    }
    const Lexicon lexicon = load_lexicon(config.lexicon_path);
    const PatternSet& patterns = PatternSet::builtin();

    std::filesystem::create_directories(config.output_dir);

    RunOutputs outputs;
    CorpusScoreResult scored =
        score_corpus(config.corpus_paths, config.format, config.workers,
                     *stopwords, lexicon, patterns);
    outputs.diagnostics.total = scored.total;
    outputs.diagnostics.malformed = scored.malformed;
    outputs.diagnostics.candidate_rejected = scored.candidate_rejected;
    outputs.diagnostics.zero_vector_dropped = scored.zero_vector_dropped;

    std::uint64_t out_of_range = 0;
    outputs.raw = config.range
                      ? scored.aggregator.finalize(*config.range, &out_of_range)
                      : scored.aggregator.finalize();
    outputs.diagnostics.out_of_range = out_of_range;
    outputs.diagnostics.scored_retained =
        scored.aggregator.message_count() - out_of_range;

    const bool have_days = !outputs.raw.slices.empty();
    if (have_days) {
        outputs.zscore = zscore_normalize(outputs.raw, config.k);
        outputs.varnorm = variance_normalize(outputs.raw, config.k);
    } else {
        outputs.zscore.kind = SeriesKind::ZScore;
        outputs.zscore.k = config.k;
        outputs.varnorm.kind = SeriesKind::VarNorm;
        outputs.varnorm.k = config.k;
    }

    const auto out_path = [&](const char* name) {
        return (std::filesystem::path(config.output_dir) / name).string();
    };

    try {
        const auto emit_series = [&](const MoodSeries& s, const char* name) {
            const std::string path = out_path(name);
            write_series_csv(s, path);
            outputs.files_written.push_back(path);
        };
        emit_series(outputs.raw, "raw.csv");
        emit_series(outputs.zscore, "zscore.csv");
        emit_series(outputs.varnorm, "varnorm.csv");

        const auto pick = [&](SeriesKind kind) -> const MoodSeries& {
            switch (kind) {
            case SeriesKind::Raw: return outputs.raw;
            case SeriesKind::ZScore: return outputs.zscore;
            case SeriesKind::VarNorm: return outputs.varnorm;
            }
            return outputs.raw;
        };

        if (outputs.raw.non_empty_days() >= 3) {
            const CorrelationMatrix m =
                correlation_matrix(pick(config.correlate_kind));
            const std::string path = out_path("correlation.csv");
            write_matrix_csv(m, path);
            outputs.files_written.push_back(path);
        }

        if (!config.periods.empty()) {
            const auto periods = builtin_periods(config.periods);
            const auto rows = compare_periods(pick(config.compare_kind),
                                              periods, config.threshold);
            const std::string path = out_path("comparisons.csv");
            write_comparisons_csv(rows, path);
            outputs.files_written.push_back(path);
        }

        {
            const std::string path = out_path("diagnostics.txt");
            std::ofstream out(path, std::ios::binary);
            if (!out) throw_data("cannot write diagnostics file: " + path);
            write_diagnostics(outputs.diagnostics, outputs.raw, out);
            if (!out) throw_data("write failed: " + path);
            outputs.files_written.push_back(path);
        }
    } catch (...) {
        std::error_code ec;
        for (const std::string& path : outputs.files_written)
            std::filesystem::remove(path, ec);
        throw;
    }

    return outputs;
}

} // namespace moodflow
