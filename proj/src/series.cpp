#include "moodflow/series.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "moodflow/error.hpp"

namespace moodflow {

namespace {

const kernels::Ops& ops() { return kernels::active_ops(); }

} // namespace

std::string_view series_kind_name(SeriesKind k) {
    switch (k) {
    case SeriesKind::Raw: return "raw";
    case SeriesKind::ZScore: return "zscore";
    case SeriesKind::VarNorm: return "varnorm";
    }
    return "raw";
}

bool parse_series_kind(std::string_view name, SeriesKind& out) {
    if (name == "raw") { out = SeriesKind::Raw; return true; }
    if (name == "zscore") { out = SeriesKind::ZScore; return true; }
    if (name == "varnorm") { out = SeriesKind::VarNorm; return true; }
    return false;
}

Date MoodSeries::start() const {
    if (slices.empty()) throw_internal("start() on empty series");
    return slices.front().date;
}

Date MoodSeries::end() const {
    if (slices.empty()) throw_internal("end() on empty series");
    return slices.back().date;
}

bool MoodSeries::in_range(Date d) const {
    return !slices.empty() && start() <= d && d <= end();
}

const DailySlice& MoodSeries::at(Date d) const {
    if (!in_range(d))
        throw_data("date " + d.to_string() + " outside series range");
    return slices[static_cast<std::size_t>(d - start())];
}

std::size_t MoodSeries::non_empty_days() const {
    std::size_t n = 0;
    for (const auto& s : slices)
        if (!s.empty()) ++n;
    return n;
}

void DailyAggregator::add(const ScoredMessage& msg) {
    DayAcc& acc = days_[msg.day];
    acc.sum.push(msg.vector.lanes);
    ++acc.count;
    ++total_;
}

MoodSeries DailyAggregator::finalize() const {
    if (days_.empty()) return MoodSeries{};
    DateRange range{days_.begin()->first, days_.rbegin()->first};
    return finalize(range, nullptr);
}

MoodSeries DailyAggregator::finalize(const DateRange& range,
                                     std::uint64_t* out_of_range_tally) const {
    if (range.last < range.first)
        throw_data("reversed date range: " + range.first.to_string() + " .. " +
                   range.last.to_string());
    MoodSeries series;
    series.kind = SeriesKind::Raw;
    series.slices.reserve(static_cast<std::size_t>(range.length_days()));
    auto it = days_.begin();
    std::uint64_t skipped = 0;
    for (; it != days_.end() && it->first < range.first; ++it)
        skipped += it->second.count;
    for (Date d = range.first; d <= range.last; ++d) {
        DailySlice slice;
        slice.date = d;
        if (it != days_.end() && it->first == d) {
            slice.message_count = it->second.count;
            const kernels::Vec8d total = it->second.sum.total();
            ops().div_scalar(slice.aggregate.lanes, total,
                             static_cast<double>(it->second.count));
            ++it;
        }
        series.slices.push_back(slice);
    }
    for (; it != days_.end(); ++it) skipped += it->second.count;
    if (out_of_range_tally) *out_of_range_tally = skipped;
    return series;
}

WindowStats window_stats(const MoodSeries& series, Date center, int k) {
    if (k < 1) throw_usage("window half-width k must be >= 1");
    if (!series.in_range(center))
        throw_data("window center " + center.to_string() +
                   " outside series range");

    WindowStats ws;
    ws.center = center;
    ws.k = k;

    const Date lo = std::max(series.start(), center - k);
    const Date hi = std::min(series.end(), center + k);

    kernels::PairwiseAccumulator sum;
    std::size_t n = 0;
    for (Date d = lo; d <= hi; ++d) {
        const DailySlice& s = series.at(d);
        if (s.empty()) continue;
        sum.push(s.aggregate.lanes);
        ++n;
    }
    ws.effective_n = n;
    if (n == 0) return ws;

    ops().div_scalar(ws.mean, sum.total(), static_cast<double>(n));
    if (n < 2) return ws;

    kernels::PairwiseAccumulator sqsum;
    for (Date d = lo; d <= hi; ++d) {
        const DailySlice& s = series.at(d);
        if (s.empty()) continue;
        kernels::Vec8d dev, sq;
        ops().sub(dev, s.aggregate.lanes, ws.mean);
        ops().mul(sq, dev, dev);
        sqsum.push(sq);
    }
    kernels::Vec8d var;
    ops().div_scalar(var, sqsum.total(), static_cast<double>(n - 1));
    ops().sqrt_lanes(ws.sigma, var);
    ws.sigma_defined = true;
    for (int i = 0; i < kNumDimensions; ++i)
        if (ws.sigma.v[i] == 0.0) ws.any_sigma_zero = true;
    return ws;
}

namespace {

enum class NormMode { ZScore, VarNorm };

MoodSeries normalize_series(const MoodSeries& series, int k, NormMode mode) {
    if (series.kind != SeriesKind::Raw)
        throw_usage("normalization expects a raw series, got kind=" +
                    std::string(series_kind_name(series.kind)));
    if (k < 1) throw_usage("window half-width k must be >= 1");

    MoodSeries out;
    out.kind = mode == NormMode::ZScore ? SeriesKind::ZScore
                                        : SeriesKind::VarNorm;
    out.k = k;
    out.slices.reserve(series.slices.size());

    for (const DailySlice& s : series.slices) {
        DailySlice norm;
        norm.date = s.date;
        norm.message_count = s.message_count;
        if (s.empty()) {
            out.slices.push_back(norm);
            continue;
        }
        const WindowStats ws = window_stats(series, s.date, k);
        if (!ws.sigma_defined) {
            norm.degenerate = true; // values stay 0
        } else {
            if (mode == NormMode::ZScore)
                ops().zscore6(norm.aggregate.lanes, s.aggregate.lanes, ws.mean,
                              ws.sigma);
            else
                ops().sigdiv6(norm.aggregate.lanes, s.aggregate.lanes,
                              ws.sigma);
            norm.degenerate = ws.any_sigma_zero;
        }
        out.slices.push_back(norm);
    }
    return out;
}

} // namespace

MoodSeries zscore_normalize(const MoodSeries& series, int k) {
    return normalize_series(series, k, NormMode::ZScore);
}

MoodSeries variance_normalize(const MoodSeries& series, int k) {
    return normalize_series(series, k, NormMode::VarNorm);
}

std::string format_component(double v) {
    if (v == 0.0) v = 0.0; // collapse -0.0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

namespace {

const char* kSeriesHeader =
    "date,message_count,tension,depression,anger,vigour,fatigue,confusion,"
    "kind,k,degenerate";

} // namespace

void write_series_csv(const MoodSeries& series, std::ostream& out) {
    out << kSeriesHeader << "\n";
    for (const DailySlice& s : series.slices) {
        out << s.date.to_string() << "," << s.message_count << ",";
        for (int i = 0; i < kNumDimensions; ++i) {
            if (!s.empty()) out << format_component(s.aggregate.component(i));
            out << ",";
        }
        out << series_kind_name(series.kind) << "," << series.k << ","
            << (s.degenerate ? 1 : 0) << "\n";
    }
}

void write_series_csv(const MoodSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("cannot write series file: " + path);
    write_series_csv(series, out);
    if (!out) throw_data("write failed: " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

double parse_double(const std::string& cell, const std::string& source,
                    std::size_t lineno) {
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size() || cell.empty())
        throw_data(source + ":" + std::to_string(lineno) +
                   ": bad numeric cell \"" + cell + "\"");
    return v;
}

std::uint64_t parse_count(const std::string& cell, const std::string& source,
                          std::size_t lineno) {
    if (cell.empty())
        throw_data(source + ":" + std::to_string(lineno) + ": empty count");
    std::uint64_t v = 0;
    for (char c : cell) {
        if (c < '0' || c > '9')
            throw_data(source + ":" + std::to_string(lineno) +
                       ": bad integer cell \"" + cell + "\"");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

} // namespace

MoodSeries read_series_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line))
        throw_data(source + ": empty series file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSeriesHeader)
        throw_data(source + ": unexpected header \"" + line + "\"");

    MoodSeries series;
    bool first_row = true;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != 11)
            throw_data(source + ":" + std::to_string(lineno) +
                       ": expected 11 cells, got " +
                       std::to_string(cells.size()));

        DailySlice slice;
        auto date = Date::parse(cells[0]);
        if (!date)
            throw_data(source + ":" + std::to_string(lineno) +
                       ": bad date \"" + cells[0] + "\"");
        slice.date = *date;
        slice.message_count = parse_count(cells[1], source, lineno);

        const bool has_values = !cells[2].empty();
        for (int i = 0; i < kNumDimensions; ++i) {
            if (has_values != !cells[2 + i].empty())
                throw_data(source + ":" + std::to_string(lineno) +
                           ": mixed empty and non-empty component cells");
            if (has_values)
                slice.aggregate.component(i) =
                    parse_double(cells[2 + i], source, lineno);
        }
        if (has_values == (slice.message_count == 0))
            throw_data(source + ":" + std::to_string(lineno) +
                       ": message_count and component cells disagree");

        SeriesKind kind;
        if (!parse_series_kind(cells[8], kind))
            throw_data(source + ":" + std::to_string(lineno) +
                       ": unknown series kind \"" + cells[8] + "\"");
        const int k =
            static_cast<int>(parse_count(cells[9], source, lineno));
        slice.degenerate = cells[10] == "1";
        if (cells[10] != "0" && cells[10] != "1")
            throw_data(source + ":" + std::to_string(lineno) +
                       ": degenerate flag must be 0 or 1");

        if (first_row) {
            series.kind = kind;
            series.k = k;
            first_row = false;
        } else {
            if (kind != series.kind || k != series.k)
                throw_data(source + ":" + std::to_string(lineno) +
                           ": kind/k changed mid-file");
            if (slice.date - series.slices.back().date != 1)
                throw_data(source + ":" + std::to_string(lineno) +
                           ": dates must be contiguous ascending");
        }
        series.slices.push_back(std::move(slice));
    }
    return series;
}

MoodSeries read_series_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("cannot open series file: " + path);
    return read_series_csv(in, path);
}

} // namespace moodflow
