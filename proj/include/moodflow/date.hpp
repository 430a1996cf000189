#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace moodflow {

/// Calendar date stored as days since 1970-01-01 (UTC, proleptic Gregorian).
/// Comparison and arithmetic are plain integer ops, so dates are safe as map
/// keys and in tight loops.
class Date {
public:
    Date() : days_(0) {}
    explicit Date(std::int32_t days_since_epoch) : days_(days_since_epoch) {}

    static Date from_ymd(int year, unsigned month, unsigned day);

    /// Parses "YYYY-MM-DD". Rejects out-of-range fields and junk trailers.
    static std::optional<Date> parse(std::string_view text);

    /// Parses "YYYY-MM-DD" or "YYYY-MM-DDTHH:MM:SS[Z]" (time part ignored
    /// beyond validation); also accepts a space separator.
    static std::optional<Date> parse_timestamp(std::string_view text);

    std::int32_t days_since_epoch() const noexcept { return days_; }

    void ymd(int& year, unsigned& month, unsigned& day) const;

    std::string to_string() const; // "YYYY-MM-DD"

    Date operator+(int d) const { return Date(days_ + d); }
    Date operator-(int d) const { return Date(days_ - d); }
    int operator-(Date other) const { return days_ - other.days_; }
    Date& operator++() { ++days_; return *this; }

    friend bool operator==(Date a, Date b) { return a.days_ == b.days_; }
    friend bool operator!=(Date a, Date b) { return a.days_ != b.days_; }
    friend bool operator<(Date a, Date b) { return a.days_ < b.days_; }
    friend bool operator<=(Date a, Date b) { return a.days_ <= b.days_; }
    friend bool operator>(Date a, Date b) { return a.days_ > b.days_; }
    friend bool operator>=(Date a, Date b) { return a.days_ >= b.days_; }

private:
    std::int32_t days_;
};

/// Inclusive date interval. `contains` is false for an inverted range.
struct DateRange {
    Date first;
    Date last;

    bool contains(Date d) const { return first <= d && d <= last; }
    int length_days() const { return (last - first) + 1; }
};

} // namespace moodflow
