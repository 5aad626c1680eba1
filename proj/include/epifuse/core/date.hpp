#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace epifuse {

/// Calendar day stored as days since 1970-01-01 (proleptic Gregorian).
/// All feeds and trajectories are anchored to Date values so day arithmetic
/// is plain integer arithmetic.
class Date {
public:
    Date() = default;

    static Date from_ymd(int year, int month, int day);

    /// Parses "YYYY-MM-DD". Throws DataError on malformed input.
    static Date parse(std::string_view iso);

    std::string to_string() const;

    Date plus_days(int n) const
    {
        Date d;
        d.days_ = days_ + n;
        return d;
    }

    std::int32_t days_since_epoch() const { return days_; }

    friend Date operator+(Date d, int n) { return d.plus_days(n); }
    friend int operator-(Date b, Date a) { return b.days_ - a.days_; }
    auto operator<=>(const Date&) const = default;

private:
    std::int32_t days_ = 0;
};

} // namespace epifuse
