#pragma once

#include "epifuse/core/date.hpp"
#include "epifuse/inference/params.hpp"
#include "epifuse/inference/sampler.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace epifuse::ingest {

/// Where one feed's file lives and how to read it.
struct FeedFileConfig {
    std::string path;
    std::string format;                // wide_cumulative | long_daily | tweet_json
    std::optional<Date> start_date;    // declared feed start (defaults to data start)
};

/// Settings for the tweet classification pipeline.
struct ClassifyConfig {
    std::string tweets_path;
    std::string labeled_corpus_path;
    std::string lexicon_dir;
    std::string polygons_path;
    std::string gazetteer_path;
    std::string out_path = "tweet_counts.json";
    int embedding_dim = 50;
    int window = 5;
    int negatives = 5;
    int epochs = 5;
    int min_count = 1;
    int svm_epochs = 30;
    double svm_lambda = 1e-4;
    int balance_target = 0; // 0 = mean class count
};

/// One run's complete configuration, parsed from an INI-style file. Every
/// key can also be overridden with set("section.key", value), which is how
/// CLI flags are applied.
struct RunConfig {
    std::string profile = "custom"; // us_state | world | nhs_region | custom
    std::string region;
    double population = 0.0;
    Date epoch = Date::from_ymd(2020, 2, 17);
    Date end_date = Date::from_ymd(2020, 2, 17);
    int horizon = 7;
    std::uint64_t seed = 0;
    std::string out_dir = "out";
    std::vector<std::string> active_feeds{"deaths"};
    std::map<std::string, FeedFileConfig> feed_files;

    inference::SamplerConfig sampler;
    inference::PriorConfig priors;
    int feed_lag_max = 21;
    double death_delay_mean = 21.0;
    double death_delay_sd = 8.0;
    int death_delay_max = 60;

    ClassifyConfig classify;

    static RunConfig load(const std::string& path);

    /// Applies one "section.key" = value assignment. Unknown keys and
    /// malformed values are ConfigErrors.
    void set(const std::string& dotted_key, const std::string& value);

    /// Invariants shared by all commands (deaths feed active, horizon >= 1,
    /// end date not before epoch).
    void validate() const;

    /// Number of model days implied by [epoch, end_date].
    int n_days() const { return end_date - epoch + 1; }
};

} // namespace epifuse::ingest
