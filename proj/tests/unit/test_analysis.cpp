#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "moodflow/analysis.hpp"
#include "moodflow/error.hpp"

using namespace moodflow;

namespace {

const Date kDay0 = *Date::parse("2008-08-01");

MoodSeries ramp_series(int days) {
    MoodSeries s;
    s.kind = SeriesKind::ZScore;
    s.k = 30;
    for (int i = 0; i < days; ++i) {
        DailySlice slice;
        slice.date = kDay0 + i;
        slice.message_count = 1;
        for (int d = 0; d < kNumDimensions; ++d)
            slice.aggregate.component(d) = i + d * 100.0;
        s.slices.push_back(slice);
    }
    return s;
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("builtin DJIA periods") {
    const auto periods = builtin_periods("DJIA");
    REQUIRE(periods.size() == 4);
    CHECK(periods[0].name == "DJIA-I");
    CHECK(periods[0].start == *Date::parse("2008-08-01"));
    CHECK(periods[0].end == *Date::parse("2008-08-24"));
    CHECK(periods[1].name == "DJIA-II");
    CHECK(periods[1].start == *Date::parse("2008-09-15"));
    CHECK(periods[1].end == *Date::parse("2008-10-08"));
    CHECK(periods[2].name == "DJIA-III");
    CHECK(periods[2].start == *Date::parse("2008-10-09"));
    CHECK(periods[2].end == *Date::parse("2008-10-25"));
    CHECK(periods[3].name == "DJIA-IV");
    CHECK(periods[3].start == *Date::parse("2008-12-01"));
    CHECK(periods[3].end == *Date::parse("2008-12-20"));
    // adjacent periods never overlap
    CHECK(periods[1].end < periods[2].start);
}

TEST_CASE("builtin WTI periods") {
    const auto periods = builtin_periods("WTI");
    REQUIRE(periods.size() == 4);
    CHECK(periods[0].name == "WTI-I");
    CHECK(periods[0].start == *Date::parse("2008-08-01"));
    CHECK(periods[0].end == *Date::parse("2008-08-22"));
    CHECK(periods[1].start == *Date::parse("2008-09-15"));
    CHECK(periods[1].end == *Date::parse("2008-09-30"));
    CHECK(periods[2].start == *Date::parse("2008-10-01"));
    CHECK(periods[2].end == *Date::parse("2008-11-21"));
    CHECK(periods[3].start == *Date::parse("2008-11-22"));
    CHECK(periods[3].end == *Date::parse("2008-12-16"));
    for (const auto& p : periods) CHECK(p.start <= p.end);

    CHECK_THROWS_WITH_AS(builtin_periods("NASDAQ"),
                         doctest::Contains("DJIA"), Error);
}

TEST_CASE("event window: full, clipped, and validated") {
    const MoodSeries series = ramp_series(31);

    SUBCASE("interior event gets the full window") {
        const EventWindow w =
            extract_event_window(series, kDay0 + 15, 5);
        CHECK(w.event == kDay0 + 15);
        CHECK(w.h == 5);
        CHECK(w.first_offset == -5);
        CHECK(w.last_offset == 5);
        CHECK_FALSE(w.clipped);
        REQUIRE(w.size() == 11);
        for (std::size_t i = 0; i < w.size(); ++i) {
            CHECK(w.present[i]);
            CHECK(w.values[0][i] == 10.0 + static_cast<double>(i));
        }
        CHECK(w.values[1][5] == 115.0); // dimension offsets intact
    }
    SUBCASE("clipped at the start") {
        const EventWindow w = extract_event_window(series, kDay0 + 2, 5);
        CHECK(w.first_offset == -2);
        CHECK(w.last_offset == 5);
        CHECK(w.clipped);
        CHECK(w.size() == 8);
        CHECK(w.values[0][0] == 0.0);
    }
    SUBCASE("clipped at the end") {
        const EventWindow w = extract_event_window(series, kDay0 + 29, 4);
        CHECK(w.first_offset == -4);
        CHECK(w.last_offset == 1);
        CHECK(w.clipped);
    }
    SUBCASE("empty days are present=false with zero values") {
        MoodSeries holey = series;
        holey.slices[14].message_count = 0;
        holey.slices[14].aggregate = MoodVector{};
        const EventWindow w = extract_event_window(holey, kDay0 + 15, 2);
        REQUIRE(w.size() == 5);
        CHECK_FALSE(w.present[1]); // offset -1
        CHECK(w.values[0][1] == 0.0);
        CHECK(w.present[0]);
        CHECK(w.present[2]);
    }
    SUBCASE("a spike lands at offset zero") {
        MoodSeries spiky = series;
        for (auto& s : spiky.slices) s.aggregate.component(2) = 0.0;
        spiky.slices[20].aggregate.component(2) = 9.0;
        const EventWindow w = extract_event_window(spiky, kDay0 + 20, 6);
        std::size_t argmax = 0;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w.values[2][i] > w.values[2][argmax]) argmax = i;
        CHECK(w.first_offset + static_cast<int>(argmax) == 0);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(extract_event_window(series, kDay0 - 1, 5), Error);
        CHECK_THROWS_AS(extract_event_window(series, kDay0 + 31, 5), Error);
        CHECK_THROWS_AS(extract_event_window(series, kDay0 + 5, 0), Error);
    }
}

TEST_CASE("event window csv leaves absent days empty") {
    MoodSeries series = ramp_series(5);
    series.slices[1].message_count = 0;
    series.slices[1].aggregate = MoodVector{};
    const EventWindow w = extract_event_window(series, kDay0 + 1, 1);
    std::ostringstream out;
    write_event_window_csv(w, out);
    CHECK(out.str() ==
          "offset,tension,depression,anger,vigour,fatigue,confusion\n"
          "-1,0.000000000,100.000000000,200.000000000,300.000000000,"
          "400.000000000,500.000000000\n"
          "0,,,,,,\n"
          "1,2.000000000,102.000000000,202.000000000,302.000000000,"
          "402.000000000,502.000000000\n");
}

TEST_CASE("index csv parsing") {
    SUBCASE("values with header and comments") {
        std::istringstream in(
            "date,close\n# weekend gap below\n2008-08-01,11378.02\n"
            "2008-08-04,11284.15\n\n2008-08-05,11615.77\n");
        const IndexSeries idx = parse_index_csv(in, "mem", "djia");
        CHECK(idx.name == "djia");
        REQUIRE(idx.points.size() == 3);
        CHECK(idx.points[0].first == *Date::parse("2008-08-01"));
        CHECK(idx.points[0].second == 11378.02);
        CHECK(idx.points[2].second == 11615.77);
    }
    SUBCASE("headerless files work") {
        std::istringstream in("2008-08-01,1.0\n2008-08-02,2.0\n");
        CHECK(parse_index_csv(in, "mem", "x").points.size() == 2);
    }
    SUBCASE("errors") {
        const auto expect_error = [](const char* text, const char* needle) {
            std::istringstream in(text);
            CAPTURE(text);
            CHECK_THROWS_WITH_AS(parse_index_csv(in, "mem", "x"),
                                 doctest::Contains(needle), Error);
        };
        expect_error("", "empty index");
        expect_error("date,v\n", "empty index");
        expect_error("2008-08-02,1.0\n2008-08-01,2.0\n",
                     "strictly increasing");
        expect_error("2008-08-01,1.0\n2008-08-01,2.0\n",
                     "strictly increasing");
        expect_error("2008-08-01,abc\n", "bad value");
        expect_error("2008-08-01\n", "expected date,value");
        expect_error("2008-08-99,1.0\n", "bad date");
    }
}

TEST_CASE("align: inner keeps index dates, outer keeps series dates") {
    MoodSeries series = ramp_series(10); // Aug 1 .. Aug 10
    series.slices[2].message_count = 0;  // Aug 3 empty
    series.slices[2].aggregate = MoodVector{};

    IndexSeries idx;
    idx.name = "djia";
    idx.points = {
        {*Date::parse("2008-07-30"), 1.0}, // before the series
        {*Date::parse("2008-08-01"), 2.0},
        {*Date::parse("2008-08-03"), 3.0}, // empty mood day
        {*Date::parse("2008-08-06"), 4.0},
        {*Date::parse("2008-08-20"), 5.0}, // after the series
    };

    SUBCASE("inner") {
        const auto rows = align_with_index(series, idx, JoinMode::Inner);
        REQUIRE(rows.size() == 3); // index dates within the series range
        CHECK(rows[0].date == *Date::parse("2008-08-01"));
        CHECK(rows[0].have_mood);
        CHECK(rows[0].have_index);
        CHECK(rows[0].index_value == 2.0);
        CHECK(rows[0].mood.v[0] == 0.0);
        CHECK(rows[1].date == *Date::parse("2008-08-03"));
        CHECK_FALSE(rows[1].have_mood); // empty mood day kept in the join
        CHECK(rows[1].index_value == 3.0);
        CHECK(rows[2].date == *Date::parse("2008-08-06"));
        CHECK(rows[2].mood.v[0] == 5.0);
    }
    SUBCASE("outer") {
        const auto rows = align_with_index(series, idx, JoinMode::Outer);
        REQUIRE(rows.size() == 10); // one per series day
        int with_index = 0;
        for (const auto& r : rows)
            if (r.have_index) ++with_index;
        CHECK(with_index == 3);
        CHECK(rows[1].have_mood);
        CHECK_FALSE(rows[1].have_index); // Aug 2: no index that day
        CHECK_FALSE(rows[2].have_mood);  // Aug 3: empty mood day
        CHECK(rows[2].have_index);
    }
    SUBCASE("disjoint ranges are an error") {
        IndexSeries far;
        far.name = "x";
        far.points = {{*Date::parse("2009-01-01"), 1.0}};
        CHECK_THROWS_AS(align_with_index(series, far, JoinMode::Inner),
                        Error);
        CHECK_THROWS_AS(align_with_index(series, far, JoinMode::Outer),
                        Error);
    }
}

TEST_CASE("aligned csv format") {
    MoodSeries series = ramp_series(2);
    IndexSeries idx;
    idx.name = "djia";
    idx.points = {{kDay0, 11378.02}};
    const auto rows = align_with_index(series, idx, JoinMode::Outer);
    std::ostringstream out;
    write_aligned_csv(rows, "djia", out);
    CHECK(out.str() ==
          "date,tension,depression,anger,vigour,fatigue,confusion,djia\n"
          "2008-08-01,0.000000000,100.000000000,200.000000000,"
          "300.000000000,400.000000000,500.000000000,11378.020000000\n"
          "2008-08-02,1.000000000,101.000000000,201.000000000,"
          "301.000000000,401.000000000,501.000000000,\n");
}

TEST_CASE("shipped event annotations load") {
    const auto events = load_annotations(std::string(MOODFLOW_DATA_DIR) +
                                         "/events_2008.txt");
    REQUIRE(events.size() == 18);
    CHECK(events.front().start == *Date::parse("2008-08-08"));
    CHECK(events.front().end == *Date::parse("2008-08-24"));
    CHECK(events.back().start == *Date::parse("2008-12-16"));
    CHECK(events.back().end == *Date::parse("2008-12-16"));
    for (const auto& e : events) {
        CHECK(e.start <= e.end);
        CHECK(!e.label.empty());
    }
    // chronological by start date
    for (std::size_t i = 1; i < events.size(); ++i)
        CHECK(events[i - 1].start <= events[i].start);
}

} // TEST_SUITE
