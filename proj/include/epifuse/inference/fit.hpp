#pragma once

#include "epifuse/inference/diagnostics.hpp"
#include "epifuse/inference/params.hpp"
#include "epifuse/inference/sampler.hpp"
#include "epifuse/observation/model.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace epifuse::inference {

/// Aligned observations the posterior conditions on. The trajectory simulated
/// for every likelihood evaluation spans [epoch, epoch + n_days - 1].
struct DataBundle {
    Date epoch;
    int n_days = 0;
    observation::ObservedData obs;
};

/// Log posterior of an unconstrained point: priors (with Jacobians) plus the
/// observation likelihood over a fresh simulation. Numerically failed
/// trajectories yield -inf rather than an exception.
double log_posterior(std::span<const double> x, const ParamLayout& layout,
                     const DataBundle& data);

/// Per-chain retained draws stored in constrained (natural) units.
struct PosteriorSamples {
    std::vector<std::string> parameter_names;
    std::vector<std::vector<std::vector<double>>> chains; // [chain][draw][param]
    std::vector<double> acceptance_rates;                 // per chain, post-adaptation
    std::vector<double> rhat;                             // per parameter
    std::vector<double> ess;                              // per parameter
    SamplerConfig config;

    std::size_t n_chains() const { return chains.size(); }
    std::size_t n_params() const { return parameter_names.size(); }
    std::size_t total_draws() const;

    /// Pooled draws of one parameter across all chains.
    std::vector<double> pooled(std::size_t param_index) const;
};

/// Runs all chains (in parallel up to config.jobs), converts retained draws
/// to constrained space and attaches split-Rhat / ESS per parameter.
PosteriorSamples fit(const ModelSpec& spec, const DataBundle& data, const SamplerConfig& config);

struct ForecastResult {
    Date start;      // first forecast day
    int horizon = 0; // days
    std::vector<std::vector<double>> samples; // [day][draw]
    std::vector<double> mean;                 // per day
    std::vector<double> variance;             // per day, sample variance
    std::size_t used_draws = 0;
    std::size_t dropped_draws = 0;

    double quantile(std::size_t day, double p) const;
};

/// Posterior predictive deaths over the forecast window: one simulation and
/// one negative-binomial draw per posterior draw per day. The last beta knot
/// extends over the horizon. Draws whose simulation fails numerically are
/// dropped; more than 1% dropped is an error.
ForecastResult posterior_predictive(const PosteriorSamples& samples, const ModelSpec& spec,
                                    Date epoch, int n_data_days, int horizon,
                                    std::uint64_t seed);

} // namespace epifuse::inference
