#pragma once

#include "epifuse/inference/fit.hpp"
#include "epifuse/ingest/config.hpp"
#include "epifuse/ingest/feeds.hpp"

#include <string>
#include <utility>
#include <vector>

namespace epifuse::runner {

/// Generates a synthetic feed bundle from true parameters (JSON file) and
/// writes each active feed in its configured format, plus the realized-deaths
/// truth series covering the forecast horizon.
void run_simulate(const ingest::RunConfig& config, const std::string& params_json_path);

/// Trains the tweet classifier from the labeled corpus, classifies the tweet
/// stream day by day, and writes the tweet-counts JSON.
void run_classify(const ingest::RunConfig& config);

/// Loads and aligns the configured feeds, runs all chains, and writes
/// posterior.csv, diagnostics.json and manifest.json under out_dir.
void run_fit(const ingest::RunConfig& config);

/// Posterior-predictive death forecast from a stored posterior; writes
/// forecast.csv under out_dir.
void run_forecast(const ingest::RunConfig& config, const std::string& posterior_csv);

/// Compares forecast files against realized deaths; writes eval.csv with one
/// row per region: baseline NEES, then MAE %-diff and NEES per candidate.
void run_evaluate(const ingest::RunConfig& config, const std::string& truth_csv,
                  const std::string& baseline_forecast_csv,
                  const std::vector<std::pair<std::string, std::string>>& candidates);

// Shared helpers (also used by the test suites).

inference::ModelSpec build_model_spec(const ingest::RunConfig& config);

/// Loads, floors (per profile) and aligns all active feeds for the
/// configured region.
inference::DataBundle load_data_bundle(const ingest::RunConfig& config);

void write_posterior_csv(const std::string& path, const inference::PosteriorSamples& samples);
inference::PosteriorSamples read_posterior_csv(const std::string& path);

struct ForecastFile {
    std::vector<Date> dates;
    std::vector<double> mean;
    std::vector<double> variance;
};

void write_forecast_csv(const std::string& path, const inference::ForecastResult& forecast);
ForecastFile read_forecast_csv(const std::string& path);

} // namespace epifuse::runner
