#pragma once

#include "epifuse/core/rng.hpp"
#include "epifuse/core/series.hpp"
#include "epifuse/transmission/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace epifuse::observation {

/// Hard cap on delay-distribution support, in days.
constexpr int kMaxDelaySupport = 60;

/// Probabilities over integer lags 0..L. Sums to one.
struct DelayPmf {
    std::vector<double> p;

    int max_lag() const { return static_cast<int>(p.size()) - 1; }
    void validate() const;

    /// Gamma(mean, sd) discretized onto integer lags, truncated at max_lag
    /// and renormalized.
    static DelayPmf discretized_gamma(double mean, double sd, int max_lag);

    static DelayPmf point_mass(int lag);
};

/// Linkage of a low-latency feed to the new-infection series: a scaled
/// weighted sum of current and lagged daily new infections.
struct FeedLink {
    double kappa = 0.0;              // reporting scale, >= 0
    std::vector<double> lag_weights; // simplex over lags 0..L_feed
    double phi = 1.0;                // negative-binomial overdispersion, > 0

    void validate() const;
};

/// Deaths linkage: infection fatality ratio applied through a delay pmf.
struct DeathLink {
    double ifr = 0.0; // omega, in (0, 1)
    DelayPmf delay;
    double phi = 1.0;

    void validate() const;
};

/// d(t) = ifr * sum_l delay[l] * i_new(t - l); days before the series start
/// contribute zero.
DateSeries death_mean(const DateSeries& i_new, const DeathLink& link);

/// x(t) = kappa * sum_l lag_weights[l] * i_new(t - l).
DateSeries feed_mean(const DateSeries& i_new, const FeedLink& link);

/// Log pmf of the mean/overdispersion negative binomial, Var = mu + mu^2/phi.
/// mu = 0 is the point mass at zero. Throws on k < 0, mu < 0 or phi <= 0.
double negbin_logpmf(long k, double mean, double phi);

/// Gamma-Poisson mixture draw from the same parameterization.
long negbin_sample(RngStream& rng, double mean, double phi);

/// One observed feed aligned to the model calendar; missing days are NaN.
struct ObservedFeed {
    std::string name;
    DateSeries counts;
};

/// Everything the likelihood sees: deaths plus the active low-latency feeds.
struct ObservedData {
    DateSeries deaths;
    std::vector<ObservedFeed> feeds;
};

/// Sum of negbin log pmfs over feeds and non-missing days. An observed day
/// outside the trajectory is a DataError, never silent truncation.
double log_likelihood(const ObservedData& obs, const transmission::Trajectory& traj,
                      const DeathLink& death_link,
                      const std::vector<std::pair<std::string, FeedLink>>& feed_links);

/// Cumulative expected deaths, for populating the reporting D compartment.
DateSeries cumulative_deaths(const DateSeries& i_new, const DeathLink& link);

} // namespace epifuse::observation
