#pragma once

#include "epifuse/symptoms/geo.hpp"
#include "epifuse/symptoms/skipgram.hpp"
#include "epifuse/symptoms/svm.hpp"
#include "epifuse/symptoms/text.hpp"
#include "epifuse/symptoms/tweet.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace epifuse::symptoms {

/// Number of 15-minute periods in a day.
constexpr int kPeriodsPerDay = 96;

/// Up/down-samples so every class 1..5 holds exactly `target` items:
/// over-represented classes are subsampled without replacement,
/// under-represented ones are duplicated with replacement. Deterministic
/// given the seed.
std::vector<Tweet> balance_classes(const std::vector<Tweet>& labeled, int target,
                                   std::uint64_t seed);

struct ClassifierMetrics {
    double f1 = 0.0;        // macro
    double accuracy = 0.0;
    double precision = 0.0; // macro
    double recall = 0.0;    // macro
};

ClassifierMetrics evaluate_classifier(const SvmModel& model,
                                      const std::vector<std::vector<double>>& vectors,
                                      const std::vector<int>& labels);

/// Number of labels in classes 2..5 (tweets that mention symptoms).
long symptomatic_count(std::span<const int> labels);

/// count * 96 / (96 - downtime_periods). A full-outage day (96) is undefined
/// and must be treated as a missing datum by the caller; it throws here.
double correct_for_downtime(double count, int downtime_periods);

/// Count of 15-minute periods of the day with no recorded tweet.
int downtime_periods(std::span<const Tweet> day_tweets);

/// Trained per-language models plus the filter/geolocation inputs.
struct PipelineModels {
    std::map<std::string, Lexicon> lexicons;       // by language
    std::map<std::string, SkipGramModel> skipgram; // by language
    std::map<std::string, SvmModel> svm;           // by language
    std::vector<RegionPolygon> polygons;
    Gazetteer gazetteer;
};

struct DailyCounts {
    std::map<std::string, long> raw;         // per region, before correction
    std::map<std::string, double> corrected; // per region
    int downtime = 0;
    bool full_outage = false; // 96 downtime periods: missing datum
};

/// One day of the pipeline: drop retweets, keyword-filter, classify, count
/// classes 2..5 per region, correct for downtime. Tweets in languages
/// without a trained model are ignored.
DailyCounts aggregate_daily(std::span<const Tweet> day_tweets, const PipelineModels& models);

} // namespace epifuse::symptoms
