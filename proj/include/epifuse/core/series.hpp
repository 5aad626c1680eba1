#pragma once

#include "epifuse/core/date.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace epifuse {

/// Sentinel for a day with no observation. Missing days are skipped by
/// likelihoods; they are not zeros.
constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v)
{
    return std::isnan(v);
}

/// Contiguous daily series anchored to a calendar start date.
struct DateSeries {
    Date start;
    std::vector<double> values;

    DateSeries() = default;
    DateSeries(Date start_, std::vector<double> values_) : start(start_), values(std::move(values_)) {}

    static DateSeries constant(Date start, std::size_t n, double v)
    {
        return DateSeries(start, std::vector<double>(n, v));
    }

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    Date date_at(std::size_t i) const { return start + static_cast<int>(i); }
    Date end() const { return start + static_cast<int>(values.size()); } // one past last day

    bool covers(Date d) const { return d >= start && d < end(); }

    /// Value on a calendar day; days outside the series read as 0
    /// (the pre-history convention used by the lag convolutions).
    double at_or_zero(Date d) const
    {
        if (!covers(d)) return 0.0;
        return values[static_cast<std::size_t>(d - start)];
    }

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    std::size_t index_of(Date d) const { return static_cast<std::size_t>(d - start); }

    double sum_observed() const
    {
        double s = 0.0;
        for (double v : values) {
            if (!is_missing(v)) s += v;
        }
        return s;
    }

    std::size_t count_missing() const
    {
        std::size_t n = 0;
        for (double v : values) {
            if (is_missing(v)) ++n;
        }
        return n;
    }
};

} // namespace epifuse
