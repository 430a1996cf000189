#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moodflow/types.hpp"

namespace moodflow {

enum class SeriesKind { Raw, ZScore, VarNorm };

std::string_view series_kind_name(SeriesKind k);
bool parse_series_kind(std::string_view name, SeriesKind& out);

/// One calendar day. message_count == 0 marks an empty day: its aggregate
/// is meaningless and is written as empty CSV cells, never as zeros.
struct DailySlice {
    Date date;
    std::uint64_t message_count = 0;
    MoodVector aggregate;
    /// Normalized kinds only: window had < 2 usable days or some dimension
    /// had sigma == 0 (its value is emitted as 0).
    bool degenerate = false;

    bool empty() const { return message_count == 0; }
};

/// Contiguous daily series: slices[i].date == start + i, no gaps.
struct MoodSeries {
    SeriesKind kind = SeriesKind::Raw;
    int k = 0; // window half-width; 0 for raw
    std::vector<DailySlice> slices;

    Date start() const;
    Date end() const;
    bool in_range(Date d) const;
    const DailySlice& at(Date d) const; // throws outside range
    std::size_t non_empty_days() const;
};

/// Streaming daily mean of unit vectors. Push order fixes the per-day
/// pairwise summation tree, so identical input order gives bitwise
/// identical output regardless of how work was chunked upstream.
class DailyAggregator {
public:
    void add(const ScoredMessage& msg);

    /// Range derived from the data (min..max day seen). Empty input gives
    /// an empty series.
    MoodSeries finalize() const;

    /// Explicit range; messages outside it are tallied, not aggregated.
    MoodSeries finalize(const DateRange& range,
                        std::uint64_t* out_of_range_tally) const;

    std::uint64_t message_count() const { return total_; }

private:
    struct DayAcc {
        kernels::PairwiseAccumulator sum;
        std::uint64_t count = 0;
    };
    std::map<Date, DayAcc> days_;
    std::uint64_t total_ = 0;
};

/// Per-dimension mean and sample (n-1) standard deviation over the
/// non-empty days of [center-k, center+k], truncated at series edges.
struct WindowStats {
    Date center;
    int k = 0;
    kernels::Vec8d mean = kernels::Vec8d::zero();
    kernels::Vec8d sigma = kernels::Vec8d::zero();
    std::size_t effective_n = 0;
    bool sigma_defined = false; // effective_n >= 2
    bool any_sigma_zero = false;
};

WindowStats window_stats(const MoodSeries& series, Date center, int k);

/// Per-day (x - window mean) / window sigma. Empty days pass through
/// empty; sigma == 0 dimensions emit 0; degenerate flag per DailySlice.
MoodSeries zscore_normalize(const MoodSeries& series, int k);

/// Per-day x / window sigma (no mean subtraction), same flag policy.
MoodSeries variance_normalize(const MoodSeries& series, int k);

/// CSV: date,message_count,<6 components at 9 decimals>,kind,k,degenerate.
/// Empty days have empty component cells. write(read(write(s))) is
/// byte-identical to write(s), and read(write(s)) == s for any series
/// whose components came from a 9-decimal parse.
void write_series_csv(const MoodSeries& series, std::ostream& out);
void write_series_csv(const MoodSeries& series, const std::string& path);
MoodSeries read_series_csv(std::istream& in, const std::string& source);
MoodSeries read_series_csv(const std::string& path);

/// %.9f with negative zero normalized to "0.000000000".
std::string format_component(double v);

} // namespace moodflow
