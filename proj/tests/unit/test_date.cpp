#include <chrono>

#include <doctest.h>

#include "moodflow/date.hpp"

using moodflow::Date;
using moodflow::DateRange;

TEST_SUITE("date") {

TEST_CASE("round trip against std::chrono over six centuries") {
    using namespace std::chrono;
    // every 13 days from 1800 to 2400 crosses month/year/leap boundaries
    // at varying phases
    const sys_days lo = sys_days(year{1800} / January / 1);
    const sys_days hi = sys_days(year{2400} / December / 31);
    for (sys_days sd = lo; sd <= hi; sd += days{13}) {
        const year_month_day ymd{sd};
        const int y = static_cast<int>(ymd.year());
        const unsigned m = static_cast<unsigned>(ymd.month());
        const unsigned d = static_cast<unsigned>(ymd.day());

        const Date date = Date::from_ymd(y, m, d);
        CHECK(date.days_since_epoch() ==
              sd.time_since_epoch().count());

        int y2;
        unsigned m2, d2;
        date.ymd(y2, m2, d2);
        CHECK(y2 == y);
        CHECK(m2 == m);
        CHECK(d2 == d);
    }
}

TEST_CASE("epoch and known anchors") {
    CHECK(Date::from_ymd(1970, 1, 1).days_since_epoch() == 0);
    CHECK(Date::from_ymd(1970, 1, 2).days_since_epoch() == 1);
    CHECK(Date::from_ymd(1969, 12, 31).days_since_epoch() == -1);
    CHECK(Date::from_ymd(2008, 8, 1).to_string() == "2008-08-01");
    CHECK(Date::from_ymd(2008, 12, 31) - Date::from_ymd(2008, 1, 1) == 365);
    CHECK(Date::from_ymd(2009, 12, 31) - Date::from_ymd(2009, 1, 1) == 364);
}

TEST_CASE("parse accepts exactly YYYY-MM-DD") {
    const auto d = Date::parse("2008-02-29");
    REQUIRE(d.has_value());
    CHECK(d->to_string() == "2008-02-29");

    CHECK(Date::parse("2008-12-01").has_value());
    CHECK(Date::parse("0001-01-01").has_value());

    CHECK_FALSE(Date::parse("2007-02-29").has_value()); // not a leap year
    CHECK_FALSE(Date::parse("1900-02-29").has_value()); // century rule
    CHECK(Date::parse("2000-02-29").has_value());       // 400-year rule
    CHECK_FALSE(Date::parse("2008-04-31").has_value());
    CHECK_FALSE(Date::parse("2008-13-01").has_value());
    CHECK_FALSE(Date::parse("2008-00-10").has_value());
    CHECK_FALSE(Date::parse("2008-01-00").has_value());
    CHECK_FALSE(Date::parse("2008-01-32").has_value());
    CHECK_FALSE(Date::parse("2008-1-01").has_value());
    CHECK_FALSE(Date::parse("08-01-01").has_value());
    CHECK_FALSE(Date::parse("2008/01/01").has_value());
    CHECK_FALSE(Date::parse("2008-01-01 ").has_value());
    CHECK_FALSE(Date::parse(" 2008-01-01").has_value());
    CHECK_FALSE(Date::parse("2008-01-01x").has_value());
    CHECK_FALSE(Date::parse("").has_value());
    CHECK_FALSE(Date::parse("not-a-date").has_value());
}

TEST_CASE("parse_timestamp takes date or date+time") {
    const auto a = Date::parse_timestamp("2008-08-01T10:30:59Z");
    REQUIRE(a.has_value());
    CHECK(a->to_string() == "2008-08-01");

    const auto b = Date::parse_timestamp("2008-08-01 00:00:00");
    REQUIRE(b.has_value());
    CHECK(*b == *a);

    CHECK(Date::parse_timestamp("2008-08-01").has_value());
    CHECK(Date::parse_timestamp("2008-08-01T23:59:59").has_value());

    CHECK_FALSE(Date::parse_timestamp("2008-08-01T24:00:00Z").has_value());
    CHECK_FALSE(Date::parse_timestamp("2008-08-01T10:60:00").has_value());
    CHECK_FALSE(Date::parse_timestamp("2008-08-01T10:00:61").has_value());
    CHECK_FALSE(Date::parse_timestamp("2008-08-01T10:00").has_value());
    CHECK_FALSE(Date::parse_timestamp("2008-08-01X10:00:00").has_value());
    CHECK_FALSE(Date::parse_timestamp("2008-08-01T10:00:00ZZ").has_value());
    CHECK_FALSE(Date::parse_timestamp("").has_value());
}

TEST_CASE("ordering and arithmetic") {
    const Date a = Date::from_ymd(2008, 8, 1);
    const Date b = Date::from_ymd(2008, 8, 24);
    CHECK(a < b);
    CHECK(b - a == 23);
    CHECK(a + 23 == b);
    CHECK(b - 23 == a);
    Date c = a;
    ++c;
    CHECK(c.to_string() == "2008-08-02");
}

TEST_CASE("range containment and length") {
    const DateRange r{Date::from_ymd(2008, 8, 1), Date::from_ymd(2008, 8, 24)};
    CHECK(r.contains(r.first));
    CHECK(r.contains(r.last));
    CHECK(r.contains(Date::from_ymd(2008, 8, 10)));
    CHECK_FALSE(r.contains(Date::from_ymd(2008, 7, 31)));
    CHECK_FALSE(r.contains(Date::from_ymd(2008, 8, 25)));
    CHECK(r.length_days() == 24);

    const DateRange inverted{r.last, r.first};
    CHECK_FALSE(inverted.contains(r.first));
}

} // TEST_SUITE
