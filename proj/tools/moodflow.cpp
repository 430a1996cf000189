// moodflow: corpus -> six-dimensional daily mood series -> rank statistics.
// Exit codes: 0 ok, 1 usage error, 2 data error, 3 internal error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moodflow/analysis.hpp"
#include "moodflow/error.hpp"
#include "moodflow/kernels.hpp"
#include "moodflow/pipeline.hpp"
#include "moodflow/scoring.hpp"
#include "moodflow/stats.hpp"

namespace mf = moodflow;

namespace {

struct GlobalOpts {
    int workers = 1;
    std::uint64_t seed = 0; // reserved: pins randomized diagnostics
    std::string backend = "auto";
};

mf::CorpusFormat parse_format(const std::string& name) {
    if (name == "auto") return mf::CorpusFormat::Auto;
    if (name == "jsonl") return mf::CorpusFormat::Jsonl;
    if (name == "tsv") return mf::CorpusFormat::Tsv;
    mf::throw_usage("unknown corpus format \"" + name + "\"");
}

mf::SeriesKind parse_kind_or_throw(const std::string& name) {
    mf::SeriesKind kind;
    if (!mf::parse_series_kind(name, kind))
        mf::throw_usage("unknown series kind \"" + name + "\"");
    return kind;
}

mf::Date parse_date_or_throw(const std::string& text) {
    auto d = mf::Date::parse(text);
    if (!d) mf::throw_usage("bad date \"" + text + "\" (expected YYYY-MM-DD)");
    return *d;
}

void apply_backend(const std::string& name) {
    if (name == "auto") return;
    if (name == "scalar") {
        mf::kernels::select(mf::kernels::Backend::Scalar);
        return;
    }
    if (name == "avx2") {
        if (!mf::kernels::select(mf::kernels::Backend::Avx2))
            mf::throw_usage("avx2 backend not available on this machine");
        return;
    }
    mf::throw_usage("unknown backend \"" + name + "\"");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) mf::throw_data("cannot write output file: " + path);
    return out;
}

mf::StopwordList load_stopwords_or_builtin(const std::string& path) {
    return path.empty() ? mf::StopwordList::builtin()
                        : mf::StopwordList::load(path);
}

std::optional<mf::DateRange> make_range(const std::string& start,
                                        const std::string& end) {
    if (start.empty() != end.empty())
        mf::throw_usage("--start and --end must be given together");
    if (start.empty()) return std::nullopt;
    mf::DateRange range{parse_date_or_throw(start), parse_date_or_throw(end)};
    if (range.last < range.first)
        mf::throw_usage("--end precedes --start");
    return range;
}

// score: per-message dump, streamed in input order.
void cmd_score(const std::vector<std::string>& corpus,
               const std::string& format, const std::string& lexicon_path,
               const std::string& stopword_path, const std::string& output) {
    const auto stopwords = load_stopwords_or_builtin(stopword_path);
    const auto lexicon = mf::load_lexicon(lexicon_path);
    auto out = open_output(output);
    out << "datetime,tension,depression,anger,vigour,fatigue,confusion,"
           "match_count\n";
    std::uint64_t malformed = 0, total = 0;
    for (const auto& path : corpus) {
        std::uint64_t file_total = 0;
        malformed += mf::for_each_record(
            path, parse_format(format),
            [&](mf::RawMessage&& msg) {
                auto scored = mf::score_message(msg, stopwords, lexicon);
                if (!scored) return;
                out << msg.timestamp_text;
                for (int d = 0; d < mf::kNumDimensions; ++d)
                    out << ","
                        << mf::format_component(
                               scored->vector.component(d));
                out << "," << scored->match_count << "\n";
            },
            &file_total);
        total += file_total;
    }
    if (!out) mf::throw_data("write failed: " + output);
    std::cerr << "scored dump written: " << output << " (records " << total
              << ", malformed " << malformed << ")\n";
}

mf::MoodSeries aggregate_from_cli(const std::vector<std::string>& corpus,
                                  const std::string& format,
                                  const std::string& lexicon_path,
                                  const std::string& stopword_path,
                                  const std::string& start,
                                  const std::string& end, int workers,
                                  mf::RunDiagnostics* diag_out) {
    const auto stopwords = load_stopwords_or_builtin(stopword_path);
    const auto lexicon = mf::load_lexicon(lexicon_path);
    auto result = mf::score_corpus(corpus, parse_format(format), workers,
                                   stopwords, lexicon,
                                   mf::PatternSet::builtin());
    std::uint64_t out_of_range = 0;
    const auto range = make_range(start, end);
    mf::MoodSeries series =
        range ? result.aggregator.finalize(*range, &out_of_range)
              : result.aggregator.finalize();
    if (diag_out) {
        diag_out->total = result.total;
        diag_out->malformed = result.malformed;
        diag_out->candidate_rejected = result.candidate_rejected;
        diag_out->zero_vector_dropped = result.zero_vector_dropped;
        diag_out->out_of_range = out_of_range;
        diag_out->scored_retained =
            result.aggregator.message_count() - out_of_range;
    }
    return series;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-dimensional daily mood series from timestamped text"};
    app.set_config("--config", "", "flat key=value config file");
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--workers", global.workers, "scoring worker threads")
        ->capture_default_str();
    app.add_option("--seed", global.seed,
                   "seed for randomized diagnostics (reserved)")
        ->capture_default_str();
    app.add_option("--backend", global.backend,
                   "numeric backend: auto|scalar|avx2")
        ->capture_default_str();

    // shared option storage
    std::vector<std::string> corpus;
    std::string format = "auto";
    std::string lexicon_path;
    std::string stopword_path;
    std::string input_path;
    std::string output_path;
    std::string output_dir = "moodflow_out";
    std::string start_date, end_date;
    std::string periods;
    std::string kind_name = "zscore";
    std::string date_text;
    std::string index_path, index_name = "index", join_mode = "inner";
    int k = 30;
    int half_width = 15;
    double threshold = 0.05;
    bool significant_only = false;

    const auto add_corpus_opts = [&](CLI::App* cmd) {
        cmd->add_option("--corpus", corpus, "corpus file(s), JSONL or TSV")
            ->required()
            ->expected(-1);
        cmd->add_option("--format", format, "corpus format: auto|jsonl|tsv")
            ->capture_default_str();
        cmd->add_option("--lexicon", lexicon_path, "lexicon file")->required();
        cmd->add_option("--stopwords", stopword_path,
                        "stopword file (default: built-in list)");
    };

    auto* score = app.add_subcommand("score", "per-message scored dump (CSV)");
    add_corpus_opts(score);
    score->add_option("--output", output_path, "output CSV path")->required();

    auto* aggregate =
        app.add_subcommand("aggregate", "daily raw mood series (CSV)");
    add_corpus_opts(aggregate);
    aggregate->add_option("--start", start_date, "range start (YYYY-MM-DD)");
    aggregate->add_option("--end", end_date, "range end (YYYY-MM-DD)");
    aggregate->add_option("--output", output_path, "output CSV path")
        ->required();

    auto* normalize =
        app.add_subcommand("normalize", "z-score or variance normalization");
    normalize->add_option("--input", input_path, "raw series CSV")->required();
    normalize->add_option("--kind", kind_name, "zscore|varnorm")
        ->capture_default_str();
    normalize->add_option("-k,--k", k, "window half-width in days")
        ->capture_default_str();
    normalize->add_option("--output", output_path, "output CSV path")
        ->required();

    auto* correlate =
        app.add_subcommand("correlate", "6x6 rank correlation matrix");
    correlate->add_option("--input", input_path, "series CSV")->required();
    correlate->add_option("--output", output_path, "output CSV path")
        ->required();

    auto* compare = app.add_subcommand(
        "compare-periods", "rank tests of mood levels between periods");
    compare->add_option("--input", input_path, "series CSV")->required();
    compare->add_option("--periods", periods, "builtin period set: DJIA|WTI")
        ->required();
    compare->add_option("--threshold", threshold, "significance threshold")
        ->capture_default_str();
    compare->add_flag("--significant-only", significant_only,
                      "emit only rows with p below the threshold");
    compare->add_option("--output", output_path, "output CSV path")
        ->required();

    auto* event =
        app.add_subcommand("event-window", "series slice around a date");
    event->add_option("--input", input_path, "series CSV")->required();
    event->add_option("--date", date_text, "event date (YYYY-MM-DD)")
        ->required();
    event->add_option("--half-width", half_width, "days before/after")
        ->capture_default_str();
    event->add_option("--output", output_path, "output CSV path")->required();

    auto* align =
        app.add_subcommand("align-index", "join mood series with an index");
    align->add_option("--input", input_path, "series CSV")->required();
    align->add_option("--index", index_path, "index CSV (date,value)")
        ->required();
    align->add_option("--name", index_name, "index column label")
        ->capture_default_str();
    align->add_option("--mode", join_mode, "inner|outer")
        ->capture_default_str();
    align->add_option("--output", output_path, "output CSV path")->required();

    auto* run = app.add_subcommand("run", "end-to-end pipeline");
    add_corpus_opts(run);
    run->add_option("--start", start_date, "range start (YYYY-MM-DD)");
    run->add_option("--end", end_date, "range end (YYYY-MM-DD)");
    run->add_option("-k,--k", k, "window half-width in days")
        ->capture_default_str();
    run->add_option("--threshold", threshold, "significance threshold")
        ->capture_default_str();
    run->add_option("--periods", periods,
                    "also compare builtin periods: DJIA|WTI");
    run->add_option("--output-dir", output_dir, "output directory")
        ->capture_default_str();

    auto* diag =
        app.add_subcommand("diag", "record funnel and daily counts");
    add_corpus_opts(diag);
    diag->add_option("--start", start_date, "range start (YYYY-MM-DD)");
    diag->add_option("--end", end_date, "range end (YYYY-MM-DD)");
    diag->add_option("--output", output_path,
                     "output path (default: stdout)");

    try {
        app.parse(argc, argv);
        apply_backend(global.backend);
        if (global.workers < 1) mf::throw_usage("--workers must be >= 1");

        if (score->parsed()) {
            cmd_score(corpus, format, lexicon_path, stopword_path,
                      output_path);
        } else if (aggregate->parsed()) {
            const auto series =
                aggregate_from_cli(corpus, format, lexicon_path, stopword_path,
                                   start_date, end_date, global.workers,
                                   nullptr);
            mf::write_series_csv(series, output_path);
        } else if (normalize->parsed()) {
            const auto series = mf::read_series_csv(input_path);
            const auto kind = parse_kind_or_throw(kind_name);
            if (kind == mf::SeriesKind::Raw)
                mf::throw_usage("--kind must be zscore or varnorm");
            const auto normalized = kind == mf::SeriesKind::ZScore
                                        ? mf::zscore_normalize(series, k)
                                        : mf::variance_normalize(series, k);
            mf::write_series_csv(normalized, output_path);
        } else if (correlate->parsed()) {
            const auto series = mf::read_series_csv(input_path);
            mf::write_matrix_csv(mf::correlation_matrix(series), output_path);
        } else if (compare->parsed()) {
            const auto series = mf::read_series_csv(input_path);
            auto rows = mf::compare_periods(
                series, mf::builtin_periods(periods), threshold);
            if (significant_only) {
                std::erase_if(rows, [](const mf::PeriodComparison& r) {
                    return !r.significant;
                });
            }
            mf::write_comparisons_csv(rows, output_path);
        } else if (event->parsed()) {
            const auto series = mf::read_series_csv(input_path);
            const auto window = mf::extract_event_window(
                series, parse_date_or_throw(date_text), half_width);
            mf::write_event_window_csv(window, output_path);
        } else if (align->parsed()) {
            const auto series = mf::read_series_csv(input_path);
            const auto index = mf::load_index_csv(index_path, index_name);
            mf::JoinMode mode;
            if (join_mode == "inner") mode = mf::JoinMode::Inner;
            else if (join_mode == "outer") mode = mf::JoinMode::Outer;
            else mf::throw_usage("unknown join mode \"" + join_mode + "\"");
            mf::write_aligned_csv(mf::align_with_index(series, index, mode),
                                  index_name, output_path);
        } else if (run->parsed()) {
            mf::RunConfig config;
            config.corpus_paths = corpus;
            config.format = parse_format(format);
            config.lexicon_path = lexicon_path;
            config.stopword_path = stopword_path;
            config.range = make_range(start_date, end_date);
            config.k = k;
            config.threshold = threshold;
            config.workers = global.workers;
            config.output_dir = output_dir;
            config.periods = periods;
            const auto outputs = mf::run_pipeline(config);
            for (const auto& path : outputs.files_written)
                std::cerr << "wrote " << path << "\n";
            if (!outputs.diagnostics.conserved())
                mf::throw_internal("funnel conservation violated");
        } else if (diag->parsed()) {
            mf::RunDiagnostics d;
            const auto series =
                aggregate_from_cli(corpus, format, lexicon_path, stopword_path,
                                   start_date, end_date, global.workers, &d);
            if (output_path.empty()) {
                mf::write_diagnostics(d, series, std::cout);
            } else {
                auto out = open_output(output_path);
                mf::write_diagnostics(d, series, out);
            }
            if (!d.conserved())
                mf::throw_internal("funnel conservation violated");
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // --help exits 0
    } catch (const mf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
