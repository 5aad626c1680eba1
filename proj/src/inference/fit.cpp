#include "epifuse/inference/fit.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/log.hpp"
#include "epifuse/core/rng.hpp"
#include "epifuse/core/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace epifuse::inference {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_posterior(std::span<const double> x, const ParamLayout& layout,
                     const DataBundle& data)
{
    for (double v : x) {
        if (!std::isfinite(v)) return kNegInf;
    }

    double lp = layout.log_prior(x);
    if (!std::isfinite(lp)) return kNegInf;

    if (data.n_days < 1) return lp; // prior-only target (empty data)

    ModelParams params = layout.constrain(x);
    if (!(params.transmission.initial_seed < params.transmission.population)) return kNegInf;

    try {
        const transmission::Trajectory traj = transmission::simulate(
            params.transmission, data.epoch, std::max(1, data.n_days - 1));
        const double ll = observation::log_likelihood(data.obs, traj, params.death, params.feeds);
        if (!std::isfinite(ll)) return kNegInf;
        return lp + ll;
    } catch (const NumericError&) {
        return kNegInf;
    }
}

std::size_t PosteriorSamples::total_draws() const
{
    std::size_t n = 0;
    for (const auto& c : chains) n += c.size();
    return n;
}

std::vector<double> PosteriorSamples::pooled(std::size_t param_index) const
{
    std::vector<double> out;
    out.reserve(total_draws());
    for (const auto& chain : chains) {
        for (const auto& draw : chain) out.push_back(draw[param_index]);
    }
    return out;
}

PosteriorSamples fit(const ModelSpec& spec, const DataBundle& data, const SamplerConfig& config)
{
    config.validate();
    const ParamLayout layout(spec);

    const LogDensity target = [&](std::span<const double> x) {
        return log_posterior(x, layout, data);
    };

    // Chain initial points: prior-anchored reference plus a small
    // deterministic jitter per chain.
    std::vector<std::vector<double>> inits(static_cast<std::size_t>(config.n_chains));
    const std::vector<double> ref = layout.reference_point();
    for (int c = 0; c < config.n_chains; ++c) {
        RngStream rng(config.seed, rng_domain::kChainInit, static_cast<std::uint64_t>(c));
        auto& init = inits[static_cast<std::size_t>(c)];
        init = ref;
        for (double& v : init) v += rng.normal(0.0, 0.1);
    }

    std::vector<ChainResult> results(static_cast<std::size_t>(config.n_chains));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(config.n_chains));
    std::atomic<int> next{0};

    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    const int jobs = std::min(config.n_chains,
                              config.jobs > 0 ? config.jobs : static_cast<int>(hardware));

    auto worker = [&] {
        for (;;) {
            const int c = next.fetch_add(1);
            if (c >= config.n_chains) return;
            try {
                results[static_cast<std::size_t>(c)] =
                    run_chain(config, c, target, inits[static_cast<std::size_t>(c)]);
            } catch (...) {
                failures[static_cast<std::size_t>(c)] = std::current_exception();
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    PosteriorSamples out;
    out.config = config;
    out.parameter_names = layout.parameter_names();
    out.chains.resize(results.size());
    out.acceptance_rates.reserve(results.size());
    for (std::size_t c = 0; c < results.size(); ++c) {
        out.acceptance_rates.push_back(results[c].acceptance_rate);
        auto& chain = out.chains[c];
        chain.reserve(results[c].draws.size());
        for (const auto& x : results[c].draws) {
            chain.push_back(layout.to_constrained_vector(layout.constrain(x)));
        }
        log::info("chain " + std::to_string(c) + " acceptance " +
                  std::to_string(results[c].acceptance_rate));
    }

    const std::size_t n_params = out.parameter_names.size();
    out.rhat.assign(n_params, 1.0);
    out.ess.assign(n_params, 0.0);
    for (std::size_t p = 0; p < n_params; ++p) {
        std::vector<std::vector<double>> per_chain(out.chains.size());
        for (std::size_t c = 0; c < out.chains.size(); ++c) {
            per_chain[c].reserve(out.chains[c].size());
            for (const auto& draw : out.chains[c]) per_chain[c].push_back(draw[p]);
        }
        out.rhat[p] = out.chains.size() >= 2 ? split_rhat(per_chain)
                                             : std::numeric_limits<double>::quiet_NaN();
        out.ess[p] = effective_sample_size(per_chain);
    }
    return out;
}

double ForecastResult::quantile(std::size_t day, double p) const
{
    return stats::quantile(samples.at(day), p);
}

ForecastResult posterior_predictive(const PosteriorSamples& samples, const ModelSpec& spec,
                                    Date epoch, int n_data_days, int horizon, std::uint64_t seed)
{
    if (horizon < 1) throw ConfigError("forecast horizon must be >= 1");
    if (n_data_days < 1) throw ConfigError("forecast needs n_data_days >= 1");
    if (samples.total_draws() == 0) throw DataError("posterior_predictive needs non-empty samples");

    const ParamLayout layout(spec);
    const int sim_days = n_data_days - 1 + horizon;

    ForecastResult fc;
    fc.start = epoch + n_data_days;
    fc.horizon = horizon;
    fc.samples.assign(static_cast<std::size_t>(horizon), {});
    for (auto& day : fc.samples) day.reserve(samples.total_draws());

    std::size_t global_index = 0;
    for (const auto& chain : samples.chains) {
        for (const auto& draw : chain) {
            RngStream rng(seed, rng_domain::kPredictive, global_index);
            ++global_index;
            try {
                const ModelParams params = layout.from_constrained_vector(draw);
                const transmission::Trajectory traj =
                    transmission::simulate(params.transmission, epoch, sim_days);
                const DateSeries means =
                    observation::death_mean(traj.new_infections, params.death);
                for (int h = 0; h < horizon; ++h) {
                    const auto idx = static_cast<std::size_t>(n_data_days + h);
                    const double mu = means.values[idx];
                    if (!std::isfinite(mu)) throw NumericError("non-finite predictive mean");
                    const long k = observation::negbin_sample(rng, mu, params.death.phi);
                    fc.samples[static_cast<std::size_t>(h)].push_back(static_cast<double>(k));
                }
                ++fc.used_draws;
            } catch (const NumericError&) {
                ++fc.dropped_draws;
                for (auto& day : fc.samples) day.resize(fc.used_draws); // discard partial day rows
            }
        }
    }

    const std::size_t total = fc.used_draws + fc.dropped_draws;
    if (total == 0 || static_cast<double>(fc.dropped_draws) > 0.01 * static_cast<double>(total)) {
        throw NumericError("posterior_predictive dropped " + std::to_string(fc.dropped_draws) +
                           " of " + std::to_string(total) + " draws (> 1%)");
    }

    fc.mean.resize(static_cast<std::size_t>(horizon));
    fc.variance.resize(static_cast<std::size_t>(horizon));
    for (int h = 0; h < horizon; ++h) {
        const auto& day = fc.samples[static_cast<std::size_t>(h)];
        fc.mean[static_cast<std::size_t>(h)] = stats::mean(day);
        fc.variance[static_cast<std::size_t>(h)] = stats::variance(day);
    }
    return fc;
}

} // namespace epifuse::inference
