#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "moodflow/series.hpp"
#include "moodflow/types.hpp"

namespace moodflow {

/// Slice of a series around an event date, offsets -h..+h clipped at the
/// series boundary. Offsets stay contiguous; days that are empty in the
/// series are marked absent instead of being dropped.
struct EventWindow {
    Date event;
    int h = 0;
    int first_offset = 0;
    int last_offset = 0;
    bool clipped = false;
    std::vector<bool> present; // per offset
    std::array<std::vector<double>, kNumDimensions> values; // 0 when absent

    std::size_t size() const { return present.size(); }
};

/// Throws when `event` is outside the series range. Pass the z-score
/// series for short-term deviation analysis (the usual choice).
EventWindow extract_event_window(const MoodSeries& series, Date event,
                                 int h = 15);

/// CSV: offset plus one column per dimension; absent days leave cells empty.
void write_event_window_csv(const EventWindow& w, std::ostream& out);
void write_event_window_csv(const EventWindow& w, const std::string& path);

/// External index series (market close style): strictly increasing dates,
/// gaps allowed.
struct IndexSeries {
    std::string name;
    std::string units;
    std::vector<std::pair<Date, double>> points;
};

/// CSV input: date,value per line; '#' comments; an optional "date,value"
/// header is skipped. Enforces strictly increasing dates.
IndexSeries load_index_csv(const std::string& path, std::string name);
IndexSeries parse_index_csv(std::istream& in, const std::string& source,
                            std::string name);

enum class JoinMode { Inner, Outer };

struct AlignedRow {
    Date date;
    bool have_mood = false; // false on empty series days
    kernels::Vec8d mood = kernels::Vec8d::zero();
    bool have_index = false;
    double index_value = 0.0;
};

/// Inner: one row per index date inside the series range. Outer: one row
/// per series date, index cell empty where the index has a gap. Index
/// gaps are never interpolated. Throws when the ranges are disjoint.
std::vector<AlignedRow> align_with_index(const MoodSeries& series,
                                         const IndexSeries& index,
                                         JoinMode mode);

void write_aligned_csv(const std::vector<AlignedRow>& rows,
                       const std::string& index_name, std::ostream& out);
void write_aligned_csv(const std::vector<AlignedRow>& rows,
                       const std::string& index_name, const std::string& path);

/// The four named 2008 periods for "DJIA" or "WTI". Adjacent periods are
/// disjoint: the shared DJIA boundary day 2008-10-09 belongs to DJIA-III,
/// and the nonexistent "September 31" WTI bound is September 30.
std::vector<Period> builtin_periods(std::string_view kind);

/// Report label, never an input to computation.
struct Annotation {
    Date start;
    Date end;
    std::string label;
};

/// Lines "DATE<TAB>label" or "DATE..DATE<TAB>label"; '#' comments.
std::vector<Annotation> load_annotations(const std::string& path);

} // namespace moodflow
