#include "moodflow/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace moodflow {

namespace {

// Howard Hinnant's civil-days algorithms; exact over the proleptic
// Gregorian calendar for the i32 range used here.
std::int32_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int32_t>(doe) - 719468;
}

void civil_from_days(std::int32_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned days_in_month(int y, unsigned m) {
    static constexpr std::array<unsigned, 12> k = {31, 28, 31, 30, 31, 30,
                                                   31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return k[m - 1];
}

bool parse_uint(std::string_view s, unsigned& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

} // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
    return Date(days_from_civil(year, month, day));
}

std::optional<Date> Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        return std::nullopt;
    unsigned y, m, d;
    if (!parse_uint(text.substr(0, 4), y) || !parse_uint(text.substr(5, 2), m) ||
        !parse_uint(text.substr(8, 2), d))
        return std::nullopt;
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(static_cast<int>(y), m))
        return std::nullopt;
    return Date::from_ymd(static_cast<int>(y), m, d);
}

std::optional<Date> Date::parse_timestamp(std::string_view text) {
    if (text.size() < 10) return std::nullopt;
    auto date = parse(text.substr(0, 10));
    if (!date) return std::nullopt;
    if (text.size() == 10) return date;

    // Optional time suffix "THH:MM:SS" / " HH:MM:SS", optional trailing 'Z'.
    std::string_view rest = text.substr(10);
    if (rest[0] != 'T' && rest[0] != ' ') return std::nullopt;
    rest.remove_prefix(1);
    if (!rest.empty() && rest.back() == 'Z') rest.remove_suffix(1);
    if (rest.size() != 8 || rest[2] != ':' || rest[5] != ':') return std::nullopt;
    unsigned hh, mm, ss;
    if (!parse_uint(rest.substr(0, 2), hh) || !parse_uint(rest.substr(3, 2), mm) ||
        !parse_uint(rest.substr(6, 2), ss))
        return std::nullopt;
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
    return date;
}

void Date::ymd(int& year, unsigned& month, unsigned& day) const {
    civil_from_days(days_, year, month, day);
}

std::string Date::to_string() const {
    int y;
    unsigned m, d;
    civil_from_days(days_, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, m, d);
    return buf;
}

} // namespace moodflow
