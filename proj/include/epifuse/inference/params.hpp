#pragma once

#include "epifuse/observation/model.hpp"
#include "epifuse/transmission/model.hpp"

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace epifuse::inference {

/// Prior hyperparameters. Values are declared defaults, overridable from the
/// run config; none are estimated.
struct PriorConfig {
    // Gaussian random walk on log beta.
    double log_beta0_mean = std::log(0.25);
    double log_beta0_sd = 0.5;
    double log_beta_walk_sd = 0.2;
    // Gamma priors on the mean latent / infectious periods.
    double latent_mean = 4.0;
    double latent_sd = 1.0;
    double infectious_mean = 5.0;
    double infectious_sd = 1.0;
    // Beta prior on the infection fatality ratio.
    double ifr_mean = 0.01;
    double ifr_concentration = 100.0;
    // LogNormal prior on the initial seed size.
    double seed_log_mean = std::log(10.0);
    double seed_log_sd = 1.0;
    // LogNormal prior on feed reporting scales.
    double kappa_log_mean = 0.0;
    double kappa_log_sd = 1.0;
    // Exponential prior on all overdispersion parameters.
    double phi_mean = 10.0;
    // Dirichlet concentration on feed lag weights.
    double lag_dirichlet_alpha = 1.0;
};

/// Fixed structure of one inference problem: what is sampled and how the
/// sampled values map onto the transmission and observation models.
struct ModelSpec {
    double population = 0.0;
    int n_beta_knots = 0;
    observation::DelayPmf death_delay; // fixed, not sampled
    int feed_lag_max = 21;             // lag weights over 0..feed_lag_max
    std::vector<std::string> feed_names;
    PriorConfig priors;

    void validate() const;
};

/// Number of weekly knots needed to cover n_days of data.
int beta_knots_for_days(int n_days);

/// Everything the MCMC samples, in natural (constrained) units.
struct ModelParams {
    transmission::TransmissionParams transmission;
    observation::DeathLink death;
    std::vector<std::pair<std::string, observation::FeedLink>> feeds;
};

/// Maps ModelParams onto flat vectors. Two layouts exist: the unconstrained
/// sampling vector (log/logit/stick-breaking coordinates) and the constrained
/// reporting vector (natural units, one entry per named parameter).
class ParamLayout {
public:
    explicit ParamLayout(const ModelSpec& spec);

    /// Dimension of the unconstrained sampling space.
    std::size_t dim() const { return dim_; }

    /// Dimension of the constrained reporting vector.
    std::size_t constrained_dim() const { return constrained_dim_; }

    const std::vector<std::string>& parameter_names() const { return names_; }

    ModelParams constrain(std::span<const double> x) const;
    std::vector<double> unconstrain(const ModelParams& params) const;

    std::vector<double> to_constrained_vector(const ModelParams& params) const;
    ModelParams from_constrained_vector(std::span<const double> v) const;

    /// Log prior density of the unconstrained point, including the
    /// log-Jacobian of every transform.
    double log_prior(std::span<const double> x) const;

    /// Prior-anchored unconstrained point used to initialize chains.
    std::vector<double> reference_point() const;

private:
    const ModelSpec spec_;
    std::size_t dim_ = 0;
    std::size_t constrained_dim_ = 0;
    std::vector<std::string> names_;

    std::size_t n_weights() const { return static_cast<std::size_t>(spec_.feed_lag_max) + 1; }
};

} // namespace epifuse::inference
