#pragma once

#include "epifuse/core/date.hpp"

#include <optional>
#include <string>
#include <vector>

namespace epifuse::symptoms {

struct GeoPoint {
    double lon = 0.0;
    double lat = 0.0;
};

/// One tweet record as read from the newline-delimited JSON stream. `label`
/// is 0 for unlabeled stream tweets and 1..5 for annotated corpus tweets:
/// 1 unrelated, 2 user has symptoms now, 3 user had symptoms, 4 someone else
/// has symptoms now, 5 someone else had symptoms.
struct Tweet {
    std::string text;
    std::string lang; // en | de | it | pt | es
    std::optional<GeoPoint> geo;
    std::string profile_location;
    Date day;
    int seconds_of_day = 0;
    bool is_retweet = false;
    int label = 0;
};

constexpr int kNumClasses = 5;

/// Parses newline-delimited JSON tweet records. Fields: text (required),
/// lang, timestamp ("YYYY-MM-DDTHH:MM:SS" with optional Z, or date only),
/// lon/lat, profile_location, retweet, label.
std::vector<Tweet> load_tweets_ndjson(const std::string& path);

} // namespace epifuse::symptoms
