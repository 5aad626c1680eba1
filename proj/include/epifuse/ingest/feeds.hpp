#pragma once

#include "epifuse/core/date.hpp"
#include "epifuse/core/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace epifuse::ingest {

enum class FeedKind { deaths, tests, twitter, hospital, zoe, calls111, online111 };

FeedKind feed_kind_from_string(const std::string& name);
std::string to_string(FeedKind kind);

/// One surveillance feed for one region, daily counts.
struct FeedRecord {
    FeedKind kind = FeedKind::deaths;
    std::string region;
    DateSeries series;
    Date declared_start; // first day the feed is considered observed

    /// Non-negative integer counts (missing days excluded).
    void validate_counts() const;
};

/// All feeds for one region on a shared model calendar.
struct RegionBundle {
    std::string region;
    double population = 0.0;
    Date epoch;
    std::map<FeedKind, FeedRecord> feeds;
};

/// Table of earliest admissible feed start dates for a named region profile
/// ("us_state", "world", "nhs_region"); "custom" disables the check.
std::optional<Date> profile_start_floor(const std::string& profile, FeedKind kind);

/// Wide cumulative CSV: header "region,<date>,<date>,..."; one row per
/// region. Cumulative counts are differenced to daily; negative daily values
/// (revisions) clamp to 0, counted in *clamp_warnings.
std::vector<FeedRecord> load_wide_csv(const std::string& path, FeedKind kind,
                                      std::size_t* clamp_warnings = nullptr);

/// Long daily CSV: header "region,date,count"; already-daily counts.
std::vector<FeedRecord> load_long_csv(const std::string& path, FeedKind kind);

/// Tweet-counts JSON: { region: { "YYYY-MM-DD": count } }. Duplicate date
/// keys are an error. When allowed_regions is non-null, any region id outside
/// it is an error.
std::vector<FeedRecord> load_tweet_counts_json(
    const std::string& path, const std::vector<std::string>* allowed_regions = nullptr);

/// Truncates every feed to [epoch, analysis_end]; days before a feed's data
/// or declared start become missing (never zero-filled). Idempotent.
RegionBundle align(RegionBundle bundle, Date analysis_end);

} // namespace epifuse::ingest
