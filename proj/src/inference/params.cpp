#include "epifuse/inference/params.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/stats.hpp"
#include "epifuse/inference/transforms.hpp"

#include <cmath>

namespace epifuse::inference {

void ModelSpec::validate() const
{
    if (!(population > 0.0)) throw ConfigError("model population must be > 0");
    if (n_beta_knots < 1) throw ConfigError("model needs at least one beta knot");
    if (feed_lag_max < 1 || feed_lag_max > observation::kMaxDelaySupport) {
        throw ConfigError("feed_lag_max must lie in [1, 60]");
    }
    death_delay.validate();
}

int beta_knots_for_days(int n_days)
{
    return (n_days + transmission::kKnotSpanDays - 1) / transmission::kKnotSpanDays;
}

ParamLayout::ParamLayout(const ModelSpec& spec) : spec_(spec)
{
    spec_.validate();
    const auto n_knots = static_cast<std::size_t>(spec_.n_beta_knots);
    const std::size_t n_feeds = spec_.feed_names.size();

    // Unconstrained: K knots + dL + dI + ifr + seed + phi_d, then per feed
    // kappa + (L weights via stick-breaking) + phi.
    dim_ = n_knots + 5 + n_feeds * (2 + static_cast<std::size_t>(spec_.feed_lag_max));
    constrained_dim_ = n_knots + 5 + n_feeds * (2 + n_weights());

    names_.reserve(constrained_dim_);
    for (std::size_t k = 0; k < n_knots; ++k) {
        names_.push_back("beta[" + std::to_string(k) + "]");
    }
    names_.push_back("latent_days");
    names_.push_back("infectious_days");
    names_.push_back("ifr");
    names_.push_back("initial_seed");
    names_.push_back("phi_deaths");
    for (const std::string& feed : spec_.feed_names) {
        names_.push_back("kappa_" + feed);
        for (std::size_t l = 0; l < n_weights(); ++l) {
            names_.push_back("lag_weight_" + feed + "[" + std::to_string(l) + "]");
        }
        names_.push_back("phi_" + feed);
    }
}

ModelParams ParamLayout::constrain(std::span<const double> x) const
{
    if (x.size() != dim_) throw NumericError("constrain: wrong vector length");
    ModelParams p;
    std::size_t i = 0;

    p.transmission.population = spec_.population;
    p.transmission.beta_knots.resize(static_cast<std::size_t>(spec_.n_beta_knots));
    for (double& b : p.transmission.beta_knots) b = positive_constrain(x[i++]);
    p.transmission.latent_days = positive_constrain(x[i++]);
    p.transmission.infectious_days = positive_constrain(x[i++]);
    p.death.ifr = unit_constrain(x[i++]);
    p.transmission.initial_seed = positive_constrain(x[i++]);
    p.death.phi = positive_constrain(x[i++]);
    p.death.delay = spec_.death_delay;

    for (const std::string& feed : spec_.feed_names) {
        observation::FeedLink link;
        link.kappa = positive_constrain(x[i++]);
        const auto y = x.subspan(i, static_cast<std::size_t>(spec_.feed_lag_max));
        link.lag_weights = simplex_constrain(y);
        i += static_cast<std::size_t>(spec_.feed_lag_max);
        link.phi = positive_constrain(x[i++]);
        p.feeds.emplace_back(feed, std::move(link));
    }
    return p;
}

std::vector<double> ParamLayout::unconstrain(const ModelParams& params) const
{
    std::vector<double> x;
    x.reserve(dim_);
    for (double b : params.transmission.beta_knots) x.push_back(positive_unconstrain(b));
    x.push_back(positive_unconstrain(params.transmission.latent_days));
    x.push_back(positive_unconstrain(params.transmission.infectious_days));
    x.push_back(unit_unconstrain(params.death.ifr));
    x.push_back(positive_unconstrain(params.transmission.initial_seed));
    x.push_back(positive_unconstrain(params.death.phi));
    for (const auto& [name, link] : params.feeds) {
        x.push_back(positive_unconstrain(link.kappa));
        const std::vector<double> y = simplex_unconstrain(link.lag_weights);
        x.insert(x.end(), y.begin(), y.end());
        x.push_back(positive_unconstrain(link.phi));
    }
    if (x.size() != dim_) throw NumericError("unconstrain: parameter shape mismatch");
    return x;
}

std::vector<double> ParamLayout::to_constrained_vector(const ModelParams& params) const
{
    std::vector<double> v;
    v.reserve(constrained_dim_);
    for (double b : params.transmission.beta_knots) v.push_back(b);
    v.push_back(params.transmission.latent_days);
    v.push_back(params.transmission.infectious_days);
    v.push_back(params.death.ifr);
    v.push_back(params.transmission.initial_seed);
    v.push_back(params.death.phi);
    for (const auto& [name, link] : params.feeds) {
        v.push_back(link.kappa);
        v.insert(v.end(), link.lag_weights.begin(), link.lag_weights.end());
        v.push_back(link.phi);
    }
    if (v.size() != constrained_dim_) throw NumericError("constrained vector shape mismatch");
    return v;
}

ModelParams ParamLayout::from_constrained_vector(std::span<const double> v) const
{
    if (v.size() != constrained_dim_) {
        throw DataError("posterior draw length does not match the model layout");
    }
    ModelParams p;
    std::size_t i = 0;
    p.transmission.population = spec_.population;
    p.transmission.beta_knots.assign(v.begin() + static_cast<std::ptrdiff_t>(i),
                                     v.begin() + static_cast<std::ptrdiff_t>(i) +
                                         spec_.n_beta_knots);
    i += static_cast<std::size_t>(spec_.n_beta_knots);
    p.transmission.latent_days = v[i++];
    p.transmission.infectious_days = v[i++];
    p.death.ifr = v[i++];
    p.transmission.initial_seed = v[i++];
    p.death.phi = v[i++];
    p.death.delay = spec_.death_delay;
    for (const std::string& feed : spec_.feed_names) {
        observation::FeedLink link;
        link.kappa = v[i++];
        link.lag_weights.assign(v.begin() + static_cast<std::ptrdiff_t>(i),
                                v.begin() + static_cast<std::ptrdiff_t>(i) +
                                    static_cast<std::ptrdiff_t>(n_weights()));
        i += n_weights();
        link.phi = v[i++];
        p.feeds.emplace_back(feed, std::move(link));
    }
    return p;
}

double ParamLayout::log_prior(std::span<const double> x) const
{
    if (x.size() != dim_) throw NumericError("log_prior: wrong vector length");
    const PriorConfig& pr = spec_.priors;
    double lp = 0.0;
    std::size_t i = 0;

    // Random walk on log beta; the prior lives directly on the unconstrained
    // coordinates, so no Jacobian term.
    double prev = x[i];
    lp += stats::normal_lpdf(x[i++], pr.log_beta0_mean, pr.log_beta0_sd);
    for (int k = 1; k < spec_.n_beta_knots; ++k) {
        lp += stats::normal_lpdf(x[i] - prev, 0.0, pr.log_beta_walk_sd);
        prev = x[i++];
    }

    auto gamma_on_log = [&lp](double xlog, double mean, double sd) {
        const double shape = (mean / sd) * (mean / sd);
        const double rate = mean / (sd * sd);
        lp += stats::gamma_lpdf(positive_constrain(xlog), shape, rate) +
              positive_log_jacobian(xlog);
    };
    gamma_on_log(x[i++], pr.latent_mean, pr.latent_sd);
    gamma_on_log(x[i++], pr.infectious_mean, pr.infectious_sd);

    {
        const double a = pr.ifr_mean * pr.ifr_concentration;
        const double b = (1.0 - pr.ifr_mean) * pr.ifr_concentration;
        lp += stats::beta_lpdf(unit_constrain(x[i]), a, b) + unit_log_jacobian(x[i]);
        ++i;
    }

    // LogNormal on seed: normal density on the log coordinate.
    lp += stats::normal_lpdf(x[i++], pr.seed_log_mean, pr.seed_log_sd);

    auto exponential_on_log = [&lp, &pr](double xlog) {
        const double rate = 1.0 / pr.phi_mean;
        lp += std::log(rate) - rate * positive_constrain(xlog) + positive_log_jacobian(xlog);
    };
    exponential_on_log(x[i++]); // phi_deaths

    for (std::size_t f = 0; f < spec_.feed_names.size(); ++f) {
        lp += stats::normal_lpdf(x[i++], pr.kappa_log_mean, pr.kappa_log_sd);
        const auto y = x.subspan(i, static_cast<std::size_t>(spec_.feed_lag_max));
        if (pr.lag_dirichlet_alpha != 1.0) {
            const std::vector<double> w = simplex_constrain(y);
            for (double wk : w) lp += (pr.lag_dirichlet_alpha - 1.0) * std::log(wk);
            const auto kk = static_cast<double>(w.size());
            lp += std::lgamma(pr.lag_dirichlet_alpha * kk) -
                  kk * std::lgamma(pr.lag_dirichlet_alpha);
        }
        lp += simplex_log_jacobian(y);
        i += static_cast<std::size_t>(spec_.feed_lag_max);
        exponential_on_log(x[i++]);
    }
    return lp;
}

std::vector<double> ParamLayout::reference_point() const
{
    const PriorConfig& pr = spec_.priors;
    std::vector<double> x;
    x.reserve(dim_);
    for (int k = 0; k < spec_.n_beta_knots; ++k) x.push_back(pr.log_beta0_mean);
    x.push_back(std::log(pr.latent_mean));
    x.push_back(std::log(pr.infectious_mean));
    x.push_back(stats::logit(pr.ifr_mean));
    x.push_back(pr.seed_log_mean);
    x.push_back(std::log(pr.phi_mean));
    for (std::size_t f = 0; f < spec_.feed_names.size(); ++f) {
        x.push_back(pr.kappa_log_mean);
        for (int l = 0; l < spec_.feed_lag_max; ++l) x.push_back(0.0);
        x.push_back(std::log(pr.phi_mean));
    }
    return x;
}

} // namespace epifuse::inference
