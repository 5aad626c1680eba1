#include "epifuse/symptoms/pipeline.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>

namespace epifuse::symptoms {

std::vector<Tweet> load_tweets_ndjson(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open tweet file: " + path);

    std::vector<Tweet> tweets;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(path + ":" + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }

        Tweet t;
        if (!rec.contains("text")) {
            throw DataError(path + ":" + std::to_string(line_no) + ": missing 'text'");
        }
        t.text = rec["text"].get<std::string>();
        t.lang = rec.value("lang", "en");
        t.profile_location = rec.value("profile_location", "");
        t.is_retweet = rec.value("retweet", false);
        t.label = rec.value("label", 0);
        if (t.label < 0 || t.label > kNumClasses) {
            throw DataError(path + ":" + std::to_string(line_no) + ": label must lie in 1..5");
        }
        if (rec.contains("lon") != rec.contains("lat")) {
            throw DataError(path + ":" + std::to_string(line_no) + ": lon/lat must come paired");
        }
        if (rec.contains("lon")) {
            t.geo = GeoPoint{rec["lon"].get<double>(), rec["lat"].get<double>()};
        }

        const std::string ts = rec.value("timestamp", "");
        if (!ts.empty()) {
            t.day = Date::parse(ts.substr(0, 10));
            int h = 0, m = 0, s = 0;
            if (ts.size() > 10) {
                if (std::sscanf(ts.c_str() + 10, "%*1[T ]%d:%d:%d", &h, &m, &s) < 2) {
                    throw DataError(path + ":" + std::to_string(line_no) +
                                    ": malformed timestamp '" + ts + "'");
                }
            }
            if (h < 0 || h > 23 || m < 0 || m > 59 || s < 0 || s > 60) {
                throw DataError(path + ":" + std::to_string(line_no) +
                                ": malformed timestamp '" + ts + "'");
            }
            t.seconds_of_day = h * 3600 + m * 60 + s;
        }
        tweets.push_back(std::move(t));
    }
    return tweets;
}

std::vector<Tweet> balance_classes(const std::vector<Tweet>& labeled, int target,
                                   std::uint64_t seed)
{
    if (target < 1) throw DataError("balance_classes requires target >= 1");

    std::array<std::vector<std::size_t>, kNumClasses> by_class;
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        const int label = labeled[i].label;
        if (label < 1 || label > kNumClasses) {
            throw DataError("balance_classes: tweet without a 1..5 label");
        }
        by_class[static_cast<std::size_t>(label - 1)].push_back(i);
    }

    RngStream rng(seed, rng_domain::kSymptoms, 2);
    std::vector<Tweet> out;
    out.reserve(static_cast<std::size_t>(target) * kNumClasses);
    for (auto& indices : by_class) {
        const auto n = indices.size();
        const auto want = static_cast<std::size_t>(target);
        if (n == 0) throw DataError("balance_classes: a class has no examples");
        if (n >= want) {
            std::shuffle(indices.begin(), indices.end(), rng.engine());
            for (std::size_t k = 0; k < want; ++k) out.push_back(labeled[indices[k]]);
        } else {
            for (const std::size_t idx : indices) out.push_back(labeled[idx]);
            for (std::size_t k = n; k < want; ++k) {
                out.push_back(labeled[indices[rng.uniform_int(n)]]);
            }
        }
    }
    return out;
}

ClassifierMetrics evaluate_classifier(const SvmModel& model,
                                      const std::vector<std::vector<double>>& vectors,
                                      const std::vector<int>& labels)
{
    if (vectors.empty() || vectors.size() != labels.size()) {
        throw DataError("evaluate_classifier requires matching non-empty vectors and labels");
    }

    std::array<long, kNumClasses> tp{}, fp{}, fn{};
    long correct = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const int pred = classify(model, vectors[i]);
        const int truth = labels[i];
        if (pred == truth) {
            ++correct;
            ++tp[static_cast<std::size_t>(truth - 1)];
        } else {
            ++fp[static_cast<std::size_t>(pred - 1)];
            ++fn[static_cast<std::size_t>(truth - 1)];
        }
    }

    ClassifierMetrics m;
    m.accuracy = static_cast<double>(correct) / static_cast<double>(vectors.size());
    for (int c = 0; c < kNumClasses; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        const double p =
            tp[ci] + fp[ci] > 0 ? static_cast<double>(tp[ci]) / static_cast<double>(tp[ci] + fp[ci])
                                : 0.0;
        const double r =
            tp[ci] + fn[ci] > 0 ? static_cast<double>(tp[ci]) / static_cast<double>(tp[ci] + fn[ci])
                                : 0.0;
        m.precision += p / kNumClasses;
        m.recall += r / kNumClasses;
        m.f1 += (p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0) / kNumClasses;
    }
    return m;
}

long symptomatic_count(std::span<const int> labels)
{
    long n = 0;
    for (const int label : labels) {
        if (label >= 2 && label <= 5) ++n;
    }
    return n;
}

double correct_for_downtime(double count, int downtime_periods)
{
    if (downtime_periods < 0 || downtime_periods >= kPeriodsPerDay) {
        throw DataError("downtime_periods must lie in [0, 95]; a full-outage day is a missing "
                        "datum, not a zero");
    }
    return count * static_cast<double>(kPeriodsPerDay) /
           static_cast<double>(kPeriodsPerDay - downtime_periods);
}

int downtime_periods(std::span<const Tweet> day_tweets)
{
    std::array<bool, kPeriodsPerDay> seen{};
    for (const Tweet& t : day_tweets) {
        const int period = std::clamp(t.seconds_of_day / (15 * 60), 0, kPeriodsPerDay - 1);
        seen[static_cast<std::size_t>(period)] = true;
    }
    int down = 0;
    for (const bool s : seen) {
        if (!s) ++down;
    }
    return down;
}

DailyCounts aggregate_daily(std::span<const Tweet> day_tweets, const PipelineModels& models)
{
    DailyCounts day;
    day.downtime = downtime_periods(day_tweets);
    if (day.downtime == kPeriodsPerDay) {
        day.full_outage = true;
        return day;
    }

    std::vector<Tweet> kept = drop_retweets({day_tweets.begin(), day_tweets.end()});
    for (const Tweet& t : kept) {
        const auto lex = models.lexicons.find(t.lang);
        if (lex == models.lexicons.end()) continue;
        if (!keyword_filter(t.text, lex->second)) continue;

        const auto sg = models.skipgram.find(t.lang);
        const auto svm = models.svm.find(t.lang);
        if (sg == models.skipgram.end() || svm == models.svm.end()) continue;

        const auto region = geolocate(t, models.polygons, models.gazetteer);
        if (!region.has_value()) continue;

        const int label = classify(svm->second, vectorize(t.text, sg->second));
        if (label >= 2 && label <= 5) day.raw[*region] += 1;
    }

    for (const auto& [region, count] : day.raw) {
        day.corrected[region] = correct_for_downtime(static_cast<double>(count), day.downtime);
    }
    return day;
}

} // namespace epifuse::symptoms
