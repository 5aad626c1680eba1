#include "epifuse/ingest/feeds.hpp"

#include "epifuse/core/csv.hpp"
#include "epifuse/core/errors.hpp"
#include "epifuse/core/log.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

namespace epifuse::ingest {

FeedKind feed_kind_from_string(const std::string& name)
{
    if (name == "deaths") return FeedKind::deaths;
    if (name == "tests") return FeedKind::tests;
    if (name == "twitter") return FeedKind::twitter;
    if (name == "hospital") return FeedKind::hospital;
    if (name == "zoe") return FeedKind::zoe;
    if (name == "calls111") return FeedKind::calls111;
    if (name == "online111") return FeedKind::online111;
    throw ConfigError("unknown feed kind: '" + name + "'");
}

std::string to_string(FeedKind kind)
{
    switch (kind) {
        case FeedKind::deaths: return "deaths";
        case FeedKind::tests: return "tests";
        case FeedKind::twitter: return "twitter";
        case FeedKind::hospital: return "hospital";
        case FeedKind::zoe: return "zoe";
        case FeedKind::calls111: return "calls111";
        case FeedKind::online111: return "online111";
    }
    return "?";
}

void FeedRecord::validate_counts() const
{
    for (double v : series.values) {
        if (is_missing(v)) continue;
        if (v < 0.0) {
            throw DataError("feed " + to_string(kind) + "/" + region + " has a negative count");
        }
        if (std::floor(v) != v) {
            throw DataError("feed " + to_string(kind) + "/" + region +
                            " has a non-integer count");
        }
    }
}

std::optional<Date> profile_start_floor(const std::string& profile, FeedKind kind)
{
    if (profile == "custom" || profile.empty()) return std::nullopt;

    const bool nhs = profile == "nhs_region";
    if (!nhs && profile != "us_state" && profile != "world") {
        throw ConfigError("unknown region profile: '" + profile + "'");
    }
    switch (kind) {
        case FeedKind::deaths: return Date::from_ymd(2020, 3, 24);
        case FeedKind::tests: return Date::from_ymd(2020, 3, 1);
        case FeedKind::twitter:
            return nhs ? Date::from_ymd(2020, 4, 9) : Date::from_ymd(2020, 4, 13);
        case FeedKind::hospital: return Date::from_ymd(2020, 3, 19);
        case FeedKind::zoe: return Date::from_ymd(2020, 5, 12);
        case FeedKind::calls111: return Date::from_ymd(2020, 3, 18);
        case FeedKind::online111: return Date::from_ymd(2020, 3, 18);
    }
    return std::nullopt;
}

namespace {

double parse_count(const std::string& cell, const std::string& path)
{
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v)) {
        throw DataError(path + ": non-numeric count cell '" + cell + "'");
    }
    return v;
}

} // namespace

std::vector<FeedRecord> load_wide_csv(const std::string& path, FeedKind kind,
                                      std::size_t* clamp_warnings)
{
    const auto rows = csv::read_file(path);
    if (rows.size() < 2 || rows.front().size() < 2) {
        throw DataError(path + ": wide CSV needs a header and at least one region row");
    }
    const auto& header = rows.front();

    std::vector<Date> dates;
    dates.reserve(header.size() - 1);
    for (std::size_t c = 1; c < header.size(); ++c) {
        dates.push_back(Date::parse(header[c]));
        if (c > 1 && !(dates[c - 1] - dates[c - 2] == 1)) {
            throw DataError(path + ": date columns must be consecutive days");
        }
    }

    std::size_t clamped = 0;
    std::set<std::string> seen;
    std::vector<FeedRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size()) {
            throw DataError(path + ": row " + std::to_string(r + 1) + " has " +
                            std::to_string(row.size()) + " cells, expected " +
                            std::to_string(header.size()));
        }
        if (!seen.insert(row[0]).second) {
            throw DataError(path + ": duplicate region row '" + row[0] + "'");
        }

        FeedRecord rec;
        rec.kind = kind;
        rec.region = row[0];
        rec.series.start = dates.front();
        rec.declared_start = dates.front();
        rec.series.values.reserve(dates.size());
        double prev = 0.0;
        for (std::size_t c = 1; c < row.size(); ++c) {
            const double cum = parse_count(row[c], path);
            double daily = cum - prev;
            if (daily < 0.0) {
                daily = 0.0;
                ++clamped;
            }
            rec.series.values.push_back(daily);
            prev = cum;
        }
        rec.validate_counts();
        records.push_back(std::move(rec));
    }
    if (clamped > 0) {
        log::warn(path + ": clamped " + std::to_string(clamped) +
                  " negative daily value(s) from cumulative revisions");
    }
    if (clamp_warnings != nullptr) *clamp_warnings = clamped;
    return records;
}

std::vector<FeedRecord> load_long_csv(const std::string& path, FeedKind kind)
{
    const auto rows = csv::read_file(path);
    if (rows.empty()) throw DataError(path + ": empty CSV");

    // region -> (date -> count)
    std::map<std::string, std::map<Date, double>> by_region;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 3) {
            throw DataError(path + ": row " + std::to_string(r + 1) +
                            " must be region,date,count");
        }
        const Date d = Date::parse(row[1]);
        auto& series = by_region[row[0]];
        if (!series.emplace(d, parse_count(row[2], path)).second) {
            throw DataError(path + ": duplicate date " + row[1] + " for region '" + row[0] + "'");
        }
    }

    std::vector<FeedRecord> records;
    for (auto& [region, days] : by_region) {
        FeedRecord rec;
        rec.kind = kind;
        rec.region = region;
        rec.series.start = days.begin()->first;
        rec.declared_start = rec.series.start;
        const Date last = days.rbegin()->first;
        const auto n = static_cast<std::size_t>(last - rec.series.start) + 1;
        rec.series.values.assign(n, kMissing);
        for (const auto& [d, v] : days) {
            rec.series.values[rec.series.index_of(d)] = v;
        }
        rec.validate_counts();
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<FeedRecord> load_tweet_counts_json(const std::string& path,
                                               const std::vector<std::string>* allowed_regions)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open tweet counts JSON: " + path);

    // nlohmann silently keeps the last of duplicate keys; track keys per
    // object during the parse so duplicates surface as data errors.
    std::vector<std::set<std::string>> key_stack;
    std::string duplicate_key;
    const auto callback = [&](int, nlohmann::json::parse_event_t event, nlohmann::json& piece) {
        using event_t = nlohmann::json::parse_event_t;
        if (event == event_t::object_start) {
            key_stack.emplace_back();
        } else if (event == event_t::object_end) {
            key_stack.pop_back();
        } else if (event == event_t::key) {
            if (!key_stack.back().insert(piece.get<std::string>()).second &&
                duplicate_key.empty()) {
                duplicate_key = piece.get<std::string>();
            }
        }
        return true;
    };

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in, callback);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path + ": invalid JSON: " + e.what());
    }
    if (!duplicate_key.empty()) {
        throw DataError(path + ": duplicate key '" + duplicate_key + "'");
    }
    if (!doc.is_object()) throw DataError(path + ": expected an object of regions");

    std::vector<FeedRecord> records;
    for (const auto& [region, days] : doc.items()) {
        if (allowed_regions != nullptr &&
            std::find(allowed_regions->begin(), allowed_regions->end(), region) ==
                allowed_regions->end()) {
            throw DataError(path + ": unknown region id '" + region + "'");
        }
        if (!days.is_object()) {
            throw DataError(path + ": region '" + region + "' must map dates to counts");
        }
        std::map<Date, double> parsed;
        for (const auto& [date_str, count] : days.items()) {
            const Date d = Date::parse(date_str);
            if (!count.is_number()) {
                throw DataError(path + ": count for " + region + "/" + date_str +
                                " is not a number");
            }
            const double v = count.get<double>();
            if (v < 0.0) {
                throw DataError(path + ": negative count for " + region + "/" + date_str);
            }
            parsed.emplace(d, v);
        }
        if (parsed.empty()) continue;

        FeedRecord rec;
        rec.kind = FeedKind::twitter;
        rec.region = region;
        rec.series.start = parsed.begin()->first;
        rec.declared_start = rec.series.start;
        const auto n = static_cast<std::size_t>(parsed.rbegin()->first - rec.series.start) + 1;
        rec.series.values.assign(n, kMissing);
        for (const auto& [d, v] : parsed) rec.series.values[rec.series.index_of(d)] = v;
        rec.validate_counts();
        records.push_back(std::move(rec));
    }
    return records;
}

RegionBundle align(RegionBundle bundle, Date analysis_end)
{
    if (analysis_end < bundle.epoch) throw DataError("analysis_end is before the epoch");

    const auto n_days = static_cast<std::size_t>(analysis_end - bundle.epoch) + 1;
    for (auto& [kind, rec] : bundle.feeds) {
        DateSeries aligned = DateSeries::constant(bundle.epoch, n_days, kMissing);
        for (std::size_t i = 0; i < n_days; ++i) {
            const Date day = aligned.date_at(i);
            if (day < rec.declared_start) continue;
            if (!rec.series.covers(day)) continue;
            aligned.values[i] = rec.series.values[rec.series.index_of(day)];
        }
        rec.series = std::move(aligned);
    }
    return bundle;
}

} // namespace epifuse::ingest
