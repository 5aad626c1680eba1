#include "epifuse/inference/sampler.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/rng.hpp"

#include <cmath>
#include <string>

namespace epifuse::inference {

void SamplerConfig::validate() const
{
    if (n_chains < 1) throw ConfigError("sampler needs n_chains >= 1");
    if (n_draws < 2) throw ConfigError("sampler needs n_draws >= 2");
    if (n_burn_in < 0 || n_burn_in >= n_draws) {
        throw ConfigError("sampler needs 0 <= n_burn_in < n_draws");
    }
    if (!(target_accept > 0.0) || !(target_accept < 1.0)) {
        throw ConfigError("target_accept must lie in (0, 1)");
    }
    if (!(initial_scale > 0.0)) throw ConfigError("initial_scale must be > 0");
}

namespace {

// Welford running mean/variance per coordinate.
struct RunningMoments {
    explicit RunningMoments(std::size_t dim) : mean(dim, 0.0), m2(dim, 0.0) {}

    void update(std::span<const double> x)
    {
        ++count;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double delta = x[i] - mean[i];
            mean[i] += delta / static_cast<double>(count);
            m2[i] += delta * (x[i] - mean[i]);
        }
    }

    double variance(std::size_t i) const
    {
        if (count < 2) return 1.0;
        return m2[i] / static_cast<double>(count - 1);
    }

    std::vector<double> mean, m2;
    std::size_t count = 0;
};

} // namespace

ChainResult run_chain(const SamplerConfig& config, int chain_id, const LogDensity& target,
                      std::vector<double> init)
{
    config.validate();
    const std::size_t dim = init.size();
    if (dim == 0) throw NumericError("run_chain requires a non-empty initial point");

    RngStream rng(config.seed, rng_domain::kChain, static_cast<std::uint64_t>(chain_id));

    std::vector<double> x = std::move(init);
    double lp = target(x);
    if (!std::isfinite(lp)) {
        throw NumericError("chain " + std::to_string(chain_id) +
                           ": non-finite log density at initial point");
    }

    double log_scale = std::log(2.38 / std::sqrt(static_cast<double>(dim)) * config.initial_scale);
    RunningMoments moments(dim);
    std::vector<double> proposal_sd(dim, 1.0);
    constexpr std::size_t kMinVarianceSamples = 25;

    ChainResult result;
    result.chain_id = chain_id;
    result.draws.reserve(static_cast<std::size_t>(config.n_draws - config.n_burn_in));

    std::vector<double> prop(dim);
    std::size_t accepted_burn = 0;
    std::size_t accepted_post = 0;

    for (int iter = 0; iter < config.n_draws; ++iter) {
        const bool adapting = iter < config.n_burn_in;
        const double scale = std::exp(log_scale);
        for (std::size_t i = 0; i < dim; ++i) {
            prop[i] = x[i] + scale * proposal_sd[i] * rng.normal(0.0, 1.0);
        }

        const double lp_prop = target(prop);
        const double log_alpha = lp_prop - lp;
        const double alpha = std::isfinite(lp_prop) ? std::min(1.0, std::exp(log_alpha)) : 0.0;
        const bool accept = rng.uniform() < alpha;
        if (accept) {
            x.swap(prop);
            lp = lp_prop;
            (adapting ? accepted_burn : accepted_post) += 1;
        }

        if (adapting) {
            moments.update(x);
            const double gamma = std::pow(static_cast<double>(iter + 1), -0.6);
            log_scale += gamma * (alpha - config.target_accept);
            if (moments.count >= kMinVarianceSamples) {
                for (std::size_t i = 0; i < dim; ++i) {
                    proposal_sd[i] = std::sqrt(moments.variance(i) + 1e-8);
                }
            }
        } else {
            result.draws.push_back(x);
        }
    }

    const auto n_post = static_cast<double>(config.n_draws - config.n_burn_in);
    result.acceptance_rate = static_cast<double>(accepted_post) / n_post;
    result.burn_in_acceptance =
        config.n_burn_in > 0
            ? static_cast<double>(accepted_burn) / static_cast<double>(config.n_burn_in)
            : 0.0;

    if (result.acceptance_rate < 0.01) {
        throw NumericError("chain " + std::to_string(chain_id) +
                           ": acceptance rate " + std::to_string(result.acceptance_rate) +
                           " below 1% after adaptation (proposal scale " +
                           std::to_string(std::exp(log_scale)) + ")");
    }
    return result;
}

} // namespace epifuse::inference
