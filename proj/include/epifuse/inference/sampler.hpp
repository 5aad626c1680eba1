#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace epifuse::inference {

struct SamplerConfig {
    int n_chains = 6;
    int n_draws = 2000;  // total iterations per chain
    int n_burn_in = 1000;
    std::uint64_t seed = 0;
    double target_accept = 0.234;
    double initial_scale = 0.1; // multiplies 2.38/sqrt(dim)
    int jobs = 0;               // 0 = hardware concurrency

    void validate() const;
};

using LogDensity = std::function<double(std::span<const double>)>;

struct ChainResult {
    int chain_id = 0;
    std::vector<std::vector<double>> draws; // post-burn-in, unconstrained space
    double acceptance_rate = 0.0;           // post-adaptation phase
    double burn_in_acceptance = 0.0;
};

/// Adaptive random-walk Metropolis. During burn-in the diagonal proposal is
/// scaled from a running variance estimate and a Robbins-Monro update drives
/// the global step toward the target acceptance rate; both are frozen
/// afterwards so the post-burn-in kernel is a valid fixed MCMC kernel.
/// Deterministic given (config.seed, chain_id, init).
ChainResult run_chain(const SamplerConfig& config, int chain_id, const LogDensity& target,
                      std::vector<double> init);

} // namespace epifuse::inference
