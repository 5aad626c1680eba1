#include "run.hpp"

#include "epifuse/core/csv.hpp"
#include "epifuse/core/errors.hpp"
#include "epifuse/core/log.hpp"
#include "epifuse/core/rng.hpp"
#include "epifuse/eval/metrics.hpp"
#include "epifuse/observation/model.hpp"
#include "epifuse/symptoms/pipeline.hpp"
#include "epifuse/transmission/model.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

namespace epifuse::runner {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string out_path(const ingest::RunConfig& config, const std::string& name)
{
    fs::create_directories(config.out_dir);
    return (fs::path(config.out_dir) / name).string();
}

std::vector<std::string> low_latency_feeds(const ingest::RunConfig& config)
{
    std::vector<std::string> names;
    for (const auto& feed : config.active_feeds) {
        if (feed != "deaths") names.push_back(feed);
    }
    return names;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open JSON file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DataError(path + ": invalid JSON: " + e.what());
    }
}

} // namespace

inference::ModelSpec build_model_spec(const ingest::RunConfig& config)
{
    if (!(config.population > 0.0)) throw ConfigError("run.population must be > 0");
    inference::ModelSpec spec;
    spec.population = config.population;
    spec.n_beta_knots = inference::beta_knots_for_days(config.n_days());
    spec.death_delay = observation::DelayPmf::discretized_gamma(
        config.death_delay_mean, config.death_delay_sd, config.death_delay_max);
    spec.feed_lag_max = config.feed_lag_max;
    spec.feed_names = low_latency_feeds(config);
    spec.priors = config.priors;
    spec.validate();
    return spec;
}

namespace {

ingest::FeedRecord load_feed_for_region(const ingest::RunConfig& config, const std::string& name)
{
    const auto it = config.feed_files.find(name);
    if (it == config.feed_files.end()) {
        throw ConfigError("active feed '" + name + "' has no [feeds." + name + "] section");
    }
    const ingest::FeedFileConfig& fc = it->second;
    if (fc.path.empty()) throw ConfigError("feed '" + name + "' is missing a path");
    const ingest::FeedKind kind = ingest::feed_kind_from_string(name);

    std::vector<ingest::FeedRecord> records;
    if (fc.format == "wide_cumulative" || fc.format.empty()) {
        records = ingest::load_wide_csv(fc.path, kind);
    } else if (fc.format == "long_daily") {
        records = ingest::load_long_csv(fc.path, kind);
    } else if (fc.format == "tweet_json") {
        records = ingest::load_tweet_counts_json(fc.path);
    } else {
        throw ConfigError("feed '" + name + "': unknown format '" + fc.format + "'");
    }

    for (auto& rec : records) {
        if (rec.region != config.region) continue;
        if (fc.start_date.has_value()) rec.declared_start = *fc.start_date;
        // Feeds enter the likelihood no earlier than the profile floor.
        if (const auto floor = ingest::profile_start_floor(config.profile, kind)) {
            if (rec.declared_start < *floor) rec.declared_start = *floor;
        }
        return rec;
    }
    throw DataError("feed '" + name + "': no data for region '" + config.region + "' in " +
                    fc.path);
}

} // namespace

inference::DataBundle load_data_bundle(const ingest::RunConfig& config)
{
    config.validate();

    ingest::RegionBundle bundle;
    bundle.region = config.region;
    bundle.population = config.population;
    bundle.epoch = config.epoch;
    for (const auto& name : config.active_feeds) {
        const ingest::FeedRecord rec = load_feed_for_region(config, name);
        bundle.feeds.emplace(rec.kind, rec);
    }
    bundle = ingest::align(std::move(bundle), config.end_date);

    inference::DataBundle data;
    data.epoch = config.epoch;
    data.n_days = config.n_days();
    data.obs.deaths = bundle.feeds.at(ingest::FeedKind::deaths).series;
    for (const auto& name : low_latency_feeds(config)) {
        const auto kind = ingest::feed_kind_from_string(name);
        data.obs.feeds.push_back({name, bundle.feeds.at(kind).series});
    }
    return data;
}

void write_posterior_csv(const std::string& path, const inference::PosteriorSamples& samples)
{
    csv::Writer out(path);
    out.row({"chain", "draw", "parameter", "value"});
    for (std::size_t c = 0; c < samples.chains.size(); ++c) {
        for (std::size_t d = 0; d < samples.chains[c].size(); ++d) {
            const auto& draw = samples.chains[c][d];
            for (std::size_t p = 0; p < samples.parameter_names.size(); ++p) {
                out.row({std::to_string(c), std::to_string(d), samples.parameter_names[p],
                         csv::format_double(draw[p])});
            }
        }
    }
}

inference::PosteriorSamples read_posterior_csv(const std::string& path)
{
    const auto rows = csv::read_file(path);
    if (rows.size() < 2 || rows.front() != std::vector<std::string>{"chain", "draw", "parameter",
                                                                    "value"}) {
        throw DataError(path + ": not a posterior CSV (expected chain,draw,parameter,value)");
    }

    inference::PosteriorSamples samples;
    std::map<std::string, std::size_t> param_index;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 4) throw DataError(path + ": malformed row " + std::to_string(r + 1));
        const auto chain = static_cast<std::size_t>(std::stoul(row[0]));
        const auto draw = static_cast<std::size_t>(std::stoul(row[1]));
        const std::string& param = row[2];
        const double value = std::strtod(row[3].c_str(), nullptr);

        auto [it, inserted] = param_index.emplace(param, samples.parameter_names.size());
        if (inserted) samples.parameter_names.push_back(param);

        if (chain >= samples.chains.size()) samples.chains.resize(chain + 1);
        auto& draws = samples.chains[chain];
        if (draw >= draws.size()) draws.resize(draw + 1);
        auto& vec = draws[draw];
        if (vec.size() <= it->second) vec.resize(it->second + 1);
        vec[it->second] = value;
    }
    for (const auto& chain : samples.chains) {
        for (const auto& draw : chain) {
            if (draw.size() != samples.parameter_names.size()) {
                throw DataError(path + ": incomplete posterior draw");
            }
        }
    }
    return samples;
}

void write_forecast_csv(const std::string& path, const inference::ForecastResult& forecast)
{
    csv::Writer out(path);
    out.row({"date", "mean", "variance", "q025", "q500", "q975"});
    for (int h = 0; h < forecast.horizon; ++h) {
        const auto hi = static_cast<std::size_t>(h);
        out.row({(forecast.start + h).to_string(), csv::format_double(forecast.mean[hi]),
                 csv::format_double(forecast.variance[hi]),
                 csv::format_double(forecast.quantile(hi, 0.025)),
                 csv::format_double(forecast.quantile(hi, 0.5)),
                 csv::format_double(forecast.quantile(hi, 0.975))});
    }
}

ForecastFile read_forecast_csv(const std::string& path)
{
    const auto rows = csv::read_file(path);
    if (rows.size() < 2 || rows.front().size() < 3 || rows.front()[0] != "date") {
        throw DataError(path + ": not a forecast CSV");
    }
    ForecastFile fc;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        fc.dates.push_back(Date::parse(rows[r][0]));
        fc.mean.push_back(std::strtod(rows[r][1].c_str(), nullptr));
        fc.variance.push_back(std::strtod(rows[r][2].c_str(), nullptr));
    }
    return fc;
}

// ---------------------------------------------------------------------------
// simulate

namespace {

observation::FeedLink feed_link_from_json(const json& spec, int lag_max)
{
    observation::FeedLink link;
    link.kappa = spec.value("kappa", 0.0);
    link.phi = spec.value("phi", 10.0);
    if (spec.contains("lag_weights")) {
        link.lag_weights = spec["lag_weights"].get<std::vector<double>>();
    } else {
        link.lag_weights.assign(static_cast<std::size_t>(lag_max) + 1,
                                1.0 / (static_cast<double>(lag_max) + 1.0));
    }
    return link;
}

void write_long_csv(const std::string& path, const std::string& region, const DateSeries& series)
{
    csv::Writer out(path);
    out.row({"region", "date", "count"});
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (is_missing(series.values[i])) continue;
        out.row({region, series.date_at(i).to_string(),
                 csv::format_double(series.values[i])});
    }
}

void write_wide_cumulative_csv(const std::string& path, const std::string& region,
                               const DateSeries& series)
{
    std::vector<std::string> header{"region"};
    std::vector<std::string> row{region};
    double cum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        header.push_back(series.date_at(i).to_string());
        cum += is_missing(series.values[i]) ? 0.0 : series.values[i];
        row.push_back(csv::format_double(cum));
    }
    csv::Writer out(path);
    out.row(header);
    out.row(row);
}

void write_tweet_json(const std::string& path, const std::string& region,
                      const DateSeries& series)
{
    json days = json::object();
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (is_missing(series.values[i])) continue;
        days[series.date_at(i).to_string()] = static_cast<long>(std::llround(series.values[i]));
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << json{{region, days}}.dump(2) << '\n';
}

} // namespace

void run_simulate(const ingest::RunConfig& config, const std::string& params_json_path)
{
    config.validate();
    if (!(config.population > 0.0)) throw ConfigError("run.population must be > 0");
    const json params = load_json_file(params_json_path);

    transmission::TransmissionParams tp;
    tp.population = config.population;
    tp.initial_seed = params.value("initial_seed", 10.0);
    tp.latent_days = params.value("latent_days", 4.0);
    tp.infectious_days = params.value("infectious_days", 5.0);
    if (!params.contains("beta_knots")) {
        throw DataError(params_json_path + ": beta_knots is required");
    }
    tp.beta_knots = params["beta_knots"].get<std::vector<double>>();

    observation::DeathLink death;
    death.ifr = params.value("ifr", 0.01);
    death.phi = params.value("phi_deaths", 10.0);
    death.delay = observation::DelayPmf::discretized_gamma(
        config.death_delay_mean, config.death_delay_sd, config.death_delay_max);

    const int total_days = config.n_days() + config.horizon;
    const transmission::Trajectory traj =
        transmission::simulate(tp, config.epoch, total_days - 1);

    RngStream rng(config.seed, rng_domain::kSimulate, 0);
    auto draw_series = [&rng](const DateSeries& means, double phi) {
        DateSeries out = means;
        for (double& v : out.values) {
            v = static_cast<double>(observation::negbin_sample(rng, v, phi));
        }
        return out;
    };

    const DateSeries realized_deaths =
        draw_series(observation::death_mean(traj.new_infections, death), death.phi);

    const json feed_specs = params.value("feeds", json::object());
    std::map<std::string, DateSeries> feed_draws;
    for (const auto& name : low_latency_feeds(config)) {
        if (!feed_specs.contains(name)) {
            throw DataError(params_json_path + ": missing feeds." + name);
        }
        const json& fspec = feed_specs[name];
        if (fspec.contains("noise_mean")) {
            // Feed carrying no infection signal: iid counts around a constant.
            const DateSeries level = DateSeries::constant(
                config.epoch, static_cast<std::size_t>(total_days), fspec["noise_mean"].get<double>());
            feed_draws.emplace(name, draw_series(level, fspec.value("phi", 10.0)));
        } else {
            const observation::FeedLink link = feed_link_from_json(fspec, config.feed_lag_max);
            feed_draws.emplace(
                name, draw_series(observation::feed_mean(traj.new_infections, link), link.phi));
        }
    }

    // Observation files cover [declared start (or epoch), end_date]; the
    // truth file additionally covers the forecast horizon.
    auto clip = [&](const DateSeries& full, const std::string& feed_name,
                    ingest::FeedKind kind) {
        Date start = config.epoch;
        const auto it = config.feed_files.find(feed_name);
        if (it != config.feed_files.end() && it->second.start_date.has_value()) {
            start = std::max(start, *it->second.start_date);
        }
        if (const auto floor = ingest::profile_start_floor(config.profile, kind)) {
            start = std::max(start, *floor);
        }
        const auto n = static_cast<std::size_t>(config.end_date - start) + 1;
        DateSeries out(start, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            out.values[i] = full.at_or_zero(out.date_at(i));
        }
        return out;
    };

    for (const auto& name : config.active_feeds) {
        const auto it = config.feed_files.find(name);
        if (it == config.feed_files.end()) {
            throw ConfigError("active feed '" + name + "' has no [feeds." + name + "] section");
        }
        const auto kind = ingest::feed_kind_from_string(name);
        const DateSeries& full = name == "deaths" ? realized_deaths : feed_draws.at(name);
        const DateSeries clipped = clip(full, name, kind);
        const std::string& format = it->second.format;
        if (format == "wide_cumulative" || format.empty()) {
            write_wide_cumulative_csv(it->second.path, config.region, clipped);
        } else if (format == "long_daily") {
            write_long_csv(it->second.path, config.region, clipped);
        } else if (format == "tweet_json") {
            write_tweet_json(it->second.path, config.region, clipped);
        } else {
            throw ConfigError("feed '" + name + "': unknown format '" + format + "'");
        }
    }

    write_long_csv(out_path(config, "truth.csv"), config.region, realized_deaths);

    json manifest{{"command", "simulate"},
                  {"version", kVersion},
                  {"seed", config.seed},
                  {"region", config.region},
                  {"epoch", config.epoch.to_string()},
                  {"end_date", config.end_date.to_string()},
                  {"horizon", config.horizon},
                  {"params_file", params_json_path},
                  {"true_params", params}};
    std::ofstream mf(out_path(config, "simulate_manifest.json"));
    mf << manifest.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// fit / forecast / evaluate

void run_fit(const ingest::RunConfig& config)
{
    const inference::DataBundle data = load_data_bundle(config);
    const inference::ModelSpec spec = build_model_spec(config);

    inference::SamplerConfig sampler = config.sampler;
    sampler.seed = config.seed;

    log::info("fit: " + std::to_string(data.n_days) + " days, " +
              std::to_string(inference::ParamLayout(spec).dim()) + " unconstrained parameters, " +
              std::to_string(sampler.n_chains) + " chains");
    const inference::PosteriorSamples samples = inference::fit(spec, data, sampler);

    write_posterior_csv(out_path(config, "posterior.csv"), samples);

    json rhat = json::object();
    json ess = json::object();
    double max_rhat = 0.0;
    for (std::size_t p = 0; p < samples.parameter_names.size(); ++p) {
        rhat[samples.parameter_names[p]] = samples.rhat[p];
        ess[samples.parameter_names[p]] = samples.ess[p];
        if (std::isfinite(samples.rhat[p])) max_rhat = std::max(max_rhat, samples.rhat[p]);
    }
    json diagnostics{{"acceptance_rates", samples.acceptance_rates},
                     {"rhat", rhat},
                     {"ess", ess},
                     {"max_rhat", max_rhat}};
    std::ofstream df(out_path(config, "diagnostics.json"));
    df << diagnostics.dump(2) << '\n';

    std::vector<std::uint64_t> chain_seeds;
    for (int c = 0; c < sampler.n_chains; ++c) {
        chain_seeds.push_back(mix_seed(sampler.seed, rng_domain::kChain,
                                       static_cast<std::uint64_t>(c)));
    }
    json manifest{{"command", "fit"},
                  {"version", kVersion},
                  {"seed", config.seed},
                  {"chain_seeds", chain_seeds},
                  {"region", config.region},
                  {"population", config.population},
                  {"epoch", config.epoch.to_string()},
                  {"end_date", config.end_date.to_string()},
                  {"n_days", config.n_days()},
                  {"feeds", config.active_feeds},
                  {"n_beta_knots", spec.n_beta_knots},
                  {"feed_lag_max", spec.feed_lag_max},
                  {"chains", sampler.n_chains},
                  {"draws", sampler.n_draws},
                  {"burn_in", sampler.n_burn_in},
                  {"acceptance_rates", samples.acceptance_rates},
                  {"max_rhat", max_rhat},
                  {"parameters", samples.parameter_names}};
    std::ofstream mf(out_path(config, "manifest.json"));
    mf << manifest.dump(2) << '\n';
}

void run_forecast(const ingest::RunConfig& config, const std::string& posterior_csv)
{
    config.validate();
    const inference::ModelSpec spec = build_model_spec(config);
    const inference::ParamLayout layout(spec);

    inference::PosteriorSamples samples = read_posterior_csv(posterior_csv);
    if (samples.parameter_names != layout.parameter_names()) {
        throw DataError(posterior_csv +
                        ": posterior parameters do not match this configuration's model");
    }

    const inference::ForecastResult fc = inference::posterior_predictive(
        samples, spec, config.epoch, config.n_days(), config.horizon, config.seed);
    write_forecast_csv(out_path(config, "forecast.csv"), fc);

    json manifest{{"command", "forecast"}, {"version", kVersion},
                  {"seed", config.seed},   {"posterior", posterior_csv},
                  {"horizon", config.horizon}, {"forecast_start", fc.start.to_string()},
                  {"used_draws", fc.used_draws}, {"dropped_draws", fc.dropped_draws}};
    std::ofstream mf(out_path(config, "forecast_manifest.json"));
    mf << manifest.dump(2) << '\n';
}

void run_evaluate(const ingest::RunConfig& config, const std::string& truth_csv,
                  const std::string& baseline_forecast_csv,
                  const std::vector<std::pair<std::string, std::string>>& candidates)
{
    config.validate();

    const auto truth_records = ingest::load_long_csv(truth_csv, ingest::FeedKind::deaths);
    const ingest::FeedRecord* truth_rec = nullptr;
    for (const auto& rec : truth_records) {
        if (rec.region == config.region) truth_rec = &rec;
    }
    if (truth_rec == nullptr) {
        throw DataError(truth_csv + ": no truth rows for region '" + config.region + "'");
    }

    auto metrics_for = [&](const ForecastFile& fc) {
        std::vector<double> truth;
        truth.reserve(fc.dates.size());
        for (const Date& d : fc.dates) {
            if (!truth_rec->series.covers(d) ||
                is_missing(truth_rec->series.values[truth_rec->series.index_of(d)])) {
                throw DataError(truth_csv + ": no truth value for forecast day " + d.to_string());
            }
            truth.push_back(truth_rec->series.values[truth_rec->series.index_of(d)]);
        }
        return std::pair{eval::mae(fc.mean, truth), eval::nees(fc.mean, fc.variance, truth)};
    };

    const ForecastFile baseline = read_forecast_csv(baseline_forecast_csv);
    const auto [baseline_mae, baseline_nees] = metrics_for(baseline);

    std::vector<std::string> header{"region", "baseline_nees"};
    std::vector<std::string> row{config.region, csv::format_double(baseline_nees)};
    for (const auto& [name, path] : candidates) {
        const ForecastFile fc = read_forecast_csv(path);
        const auto [cand_mae, cand_nees] = metrics_for(fc);
        header.push_back(name + "_mae_pct_diff");
        header.push_back(name + "_nees");
        row.push_back(csv::format_double(eval::mae_pct_diff(baseline_mae, cand_mae)));
        row.push_back(csv::format_double(cand_nees));
    }

    csv::Writer out(out_path(config, "eval.csv"));
    out.row(header);
    out.row(row);
}

// ---------------------------------------------------------------------------
// classify

void run_classify(const ingest::RunConfig& config)
{
    const ingest::ClassifyConfig& cc = config.classify;
    if (cc.tweets_path.empty()) throw ConfigError("classify.tweets is required");
    if (cc.labeled_corpus_path.empty()) throw ConfigError("classify.labeled_corpus is required");
    if (cc.lexicon_dir.empty()) throw ConfigError("classify.lexicon_dir is required");

    symptoms::PipelineModels models;
    if (!cc.polygons_path.empty()) {
        models.polygons = symptoms::load_region_polygons(cc.polygons_path);
    }
    if (!cc.gazetteer_path.empty()) {
        models.gazetteer = symptoms::Gazetteer::load_tsv(cc.gazetteer_path);
    }

    const std::vector<symptoms::Tweet> labeled =
        symptoms::load_tweets_ndjson(cc.labeled_corpus_path);
    std::map<std::string, std::vector<symptoms::Tweet>> by_lang;
    for (const auto& tweet : labeled) {
        if (tweet.label < 1) {
            throw DataError(cc.labeled_corpus_path + ": corpus tweet without a 1..5 label");
        }
        by_lang[tweet.lang].push_back(tweet);
    }
    if (by_lang.empty()) throw DataError(cc.labeled_corpus_path + ": empty labeled corpus");

    std::uint64_t lang_index = 0;
    for (const auto& [lang, corpus] : by_lang) {
        const fs::path lex_path = fs::path(cc.lexicon_dir) / (lang + ".tsv");
        if (!fs::exists(lex_path)) {
            throw DataError("no lexicon for language '" + lang + "' in " + cc.lexicon_dir);
        }
        models.lexicons.emplace(lang, symptoms::Lexicon::load_tsv(lex_path.string()));

        std::vector<std::vector<std::string>> sentences;
        sentences.reserve(corpus.size());
        for (const auto& tweet : corpus) sentences.push_back(symptoms::tokenize(tweet.text));

        symptoms::SkipGramConfig sg_cfg;
        sg_cfg.dim = cc.embedding_dim;
        sg_cfg.window = cc.window;
        sg_cfg.negatives = cc.negatives;
        sg_cfg.epochs = cc.epochs;
        sg_cfg.min_count = cc.min_count;
        sg_cfg.seed = mix_seed(config.seed, rng_domain::kSymptoms, lang_index);
        symptoms::SkipGramModel sg = symptoms::train_skipgram(sentences, sg_cfg);

        int target = cc.balance_target;
        if (target <= 0) {
            target = std::max<int>(1, static_cast<int>(corpus.size()) / symptoms::kNumClasses);
        }
        const std::vector<symptoms::Tweet> balanced = symptoms::balance_classes(
            corpus, target, mix_seed(config.seed, rng_domain::kSymptoms, lang_index + 1000));

        std::vector<std::vector<double>> vectors;
        std::vector<int> labels;
        vectors.reserve(balanced.size());
        for (const auto& tweet : balanced) {
            vectors.push_back(symptoms::vectorize(tweet.text, sg));
            labels.push_back(tweet.label);
        }
        symptoms::SvmConfig svm_cfg;
        svm_cfg.lambda = cc.svm_lambda;
        svm_cfg.epochs = cc.svm_epochs;
        svm_cfg.seed = mix_seed(config.seed, rng_domain::kSymptoms, lang_index + 2000);
        models.svm.emplace(lang, symptoms::train_svm(vectors, labels, svm_cfg));
        models.skipgram.emplace(lang, std::move(sg));

        log::info("classify: trained " + lang + " model on " + std::to_string(balanced.size()) +
                  " balanced tweets (vocabulary " +
                  std::to_string(models.skipgram.at(lang).vocab.size()) + ")");
        ++lang_index;
    }

    const std::vector<symptoms::Tweet> stream = symptoms::load_tweets_ndjson(cc.tweets_path);
    std::map<Date, std::vector<symptoms::Tweet>> by_day;
    for (const auto& tweet : stream) by_day[tweet.day].push_back(tweet);

    std::map<std::string, std::map<std::string, long>> counts; // region -> date -> count
    for (const auto& [day, tweets] : by_day) {
        const symptoms::DailyCounts daily = symptoms::aggregate_daily(tweets, models);
        if (daily.full_outage) {
            log::warn("classify: " + day.to_string() + " had a full outage; day dropped");
            continue;
        }
        for (const auto& [region, corrected] : daily.corrected) {
            counts[region][day.to_string()] = std::llround(corrected); // half-up for reporting
        }
    }

    json doc = json::object();
    for (const auto& [region, days] : counts) {
        json day_obj = json::object();
        for (const auto& [date, count] : days) day_obj[date] = count;
        doc[region] = day_obj;
    }
    const std::string out_file =
        fs::path(cc.out_path).is_absolute() ? cc.out_path : out_path(config, cc.out_path);
    std::ofstream out(out_file);
    if (!out) throw DataError("cannot write " + out_file);
    out << doc.dump(2) << '\n';
    log::info("classify: wrote " + out_file);
}

} // namespace epifuse::runner
