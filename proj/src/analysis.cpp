#include "moodflow/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "moodflow/error.hpp"

namespace moodflow {

EventWindow extract_event_window(const MoodSeries& series, Date event, int h) {
    if (h < 1) throw_usage("event window half-width must be >= 1");
    if (!series.in_range(event))
        throw_data("event date " + event.to_string() +
                   " outside series range");

    EventWindow w;
    w.event = event;
    w.h = h;
    w.first_offset = std::max(-h, series.start() - event);
    w.last_offset = std::min(h, series.end() - event);
    w.clipped = w.first_offset != -h || w.last_offset != h;

    for (int off = w.first_offset; off <= w.last_offset; ++off) {
        const DailySlice& s = series.at(event + off);
        w.present.push_back(!s.empty());
        for (int d = 0; d < kNumDimensions; ++d)
            w.values[d].push_back(s.empty() ? 0.0 : s.aggregate.component(d));
    }
    return w;
}

void write_event_window_csv(const EventWindow& w, std::ostream& out) {
    out << "offset";
    for (int d = 0; d < kNumDimensions; ++d) out << "," << kDimensionNames[d];
    out << "\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out << (w.first_offset + static_cast<int>(i));
        for (int d = 0; d < kNumDimensions; ++d) {
            out << ",";
            if (w.present[i]) out << format_component(w.values[d][i]);
        }
        out << "\n";
    }
}

void write_event_window_csv(const EventWindow& w, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("cannot write event window file: " + path);
    write_event_window_csv(w, out);
    if (!out) throw_data("write failed: " + path);
}

IndexSeries parse_index_csv(std::istream& in, const std::string& source,
                            std::string name) {
    IndexSeries index;
    index.name = std::move(name);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line.rfind("date,", 0) == 0) continue; // header
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw_data(source + ":" + std::to_string(lineno) +
                       ": expected date,value");
        auto date = Date::parse(line.substr(0, comma));
        if (!date)
            throw_data(source + ":" + std::to_string(lineno) + ": bad date \"" +
                       line.substr(0, comma) + "\"");
        const std::string cell = line.substr(comma + 1);
        char* end = nullptr;
        const double value = std::strtod(cell.c_str(), &end);
        if (cell.empty() || end != cell.c_str() + cell.size())
            throw_data(source + ":" + std::to_string(lineno) +
                       ": bad value \"" + cell + "\"");
        if (!index.points.empty() && !(index.points.back().first < *date))
            throw_data(source + ":" + std::to_string(lineno) +
                       ": dates must be strictly increasing");
        index.points.emplace_back(*date, value);
    }
    if (index.points.empty()) throw_data(source + ": empty index series");
    return index;
}

IndexSeries load_index_csv(const std::string& path, std::string name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("cannot open index file: " + path);
    return parse_index_csv(in, path, std::move(name));
}

std::vector<AlignedRow> align_with_index(const MoodSeries& series,
                                         const IndexSeries& index,
                                         JoinMode mode) {
    if (series.slices.empty()) throw_data("align: empty mood series");
    const Date lo = std::max(series.start(), index.points.front().first);
    const Date hi = std::min(series.end(), index.points.back().first);
    if (hi < lo)
        throw_data("align: series (" + series.start().to_string() + " .. " +
                   series.end().to_string() + ") and index (" +
                   index.points.front().first.to_string() + " .. " +
                   index.points.back().first.to_string() +
                   ") ranges are disjoint");

    std::vector<AlignedRow> rows;
    if (mode == JoinMode::Inner) {
        for (const auto& [date, value] : index.points) {
            if (!series.in_range(date)) continue;
            AlignedRow row;
            row.date = date;
            const DailySlice& s = series.at(date);
            row.have_mood = !s.empty();
            if (row.have_mood) row.mood = s.aggregate.lanes;
            row.have_index = true;
            row.index_value = value;
            rows.push_back(row);
        }
    } else {
        auto it = index.points.begin();
        for (const DailySlice& s : series.slices) {
            while (it != index.points.end() && it->first < s.date) ++it;
            AlignedRow row;
            row.date = s.date;
            row.have_mood = !s.empty();
            if (row.have_mood) row.mood = s.aggregate.lanes;
            if (it != index.points.end() && it->first == s.date) {
                row.have_index = true;
                row.index_value = it->second;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void write_aligned_csv(const std::vector<AlignedRow>& rows,
                       const std::string& index_name, std::ostream& out) {
    out << "date";
    for (int d = 0; d < kNumDimensions; ++d) out << "," << kDimensionNames[d];
    out << "," << (index_name.empty() ? "index" : index_name) << "\n";
    for (const AlignedRow& r : rows) {
        out << r.date.to_string();
        for (int d = 0; d < kNumDimensions; ++d) {
            out << ",";
            if (r.have_mood) out << format_component(r.mood.v[d]);
        }
        out << ",";
        if (r.have_index) out << format_component(r.index_value);
        out << "\n";
    }
}

void write_aligned_csv(const std::vector<AlignedRow>& rows,
                       const std::string& index_name, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("cannot write aligned file: " + path);
    write_aligned_csv(rows, index_name, out);
    if (!out) throw_data("write failed: " + path);
}

std::vector<Period> builtin_periods(std::string_view kind) {
    auto day = [](unsigned m, unsigned d) { return Date::from_ymd(2008, m, d); };
    if (kind == "DJIA") {
        return {
            {"DJIA-I", day(8, 1), day(8, 24)},
            {"DJIA-II", day(9, 15), day(10, 8)},
            {"DJIA-III", day(10, 9), day(10, 25)},
            {"DJIA-IV", day(12, 1), day(12, 20)},
        };
    }
    if (kind == "WTI") {
        return {
            {"WTI-I", day(8, 1), day(8, 22)},
            {"WTI-II", day(9, 15), day(9, 30)},
            {"WTI-III", day(10, 1), day(11, 21)},
            {"WTI-IV", day(11, 22), day(12, 16)},
        };
    }
    throw_usage("unknown builtin period set \"" + std::string(kind) +
                "\" (expected DJIA or WTI)");
}

std::vector<Annotation> load_annotations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_data("cannot open annotations file: " + path);
    std::vector<Annotation> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw_data(path + ":" + std::to_string(lineno) +
                       ": expected DATE<TAB>label");
        std::string when = line.substr(0, tab);
        Annotation a;
        a.label = line.substr(tab + 1);
        auto dots = when.find("..");
        if (dots == std::string::npos) {
            auto d = Date::parse(when);
            if (!d)
                throw_data(path + ":" + std::to_string(lineno) +
                           ": bad date \"" + when + "\"");
            a.start = a.end = *d;
        } else {
            auto d1 = Date::parse(when.substr(0, dots));
            auto d2 = Date::parse(when.substr(dots + 2));
            if (!d1 || !d2 || *d2 < *d1)
                throw_data(path + ":" + std::to_string(lineno) +
                           ": bad date range \"" + when + "\"");
            a.start = *d1;
            a.end = *d2;
        }
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace moodflow
