#include "epifuse/observation/model.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/stats.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace epifuse::observation {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSimplexTol = 1e-9;
} // namespace

void DelayPmf::validate() const
{
    if (p.empty()) throw DataError("delay pmf must be non-empty");
    if (max_lag() > kMaxDelaySupport) throw DataError("delay pmf support exceeds 60 days");
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0) throw DataError("delay pmf has a negative probability");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kSimplexTol) throw DataError("delay pmf does not sum to 1");
}

DelayPmf DelayPmf::discretized_gamma(double mean, double sd, int max_lag)
{
    if (!(mean > 0.0) || !(sd > 0.0)) throw DataError("delay gamma needs mean > 0 and sd > 0");
    if (max_lag < 0 || max_lag > kMaxDelaySupport) {
        throw DataError("delay max_lag must lie in [0, 60]");
    }
    const double shape = (mean / sd) * (mean / sd);
    const double scale = sd * sd / mean;

    DelayPmf pmf;
    pmf.p.resize(static_cast<std::size_t>(max_lag) + 1);
    double prev = 0.0;
    for (int l = 0; l <= max_lag; ++l) {
        const double hi = stats::gamma_cdf(l + 0.5, shape, scale);
        pmf.p[static_cast<std::size_t>(l)] = hi - prev;
        prev = hi;
    }
    double total = 0.0;
    for (double v : pmf.p) total += v;
    if (!(total > 0.0)) throw NumericError("discretized delay pmf has zero mass");
    for (double& v : pmf.p) v /= total;
    return pmf;
}

DelayPmf DelayPmf::point_mass(int lag)
{
    if (lag < 0 || lag > kMaxDelaySupport) throw DataError("point-mass lag must lie in [0, 60]");
    DelayPmf pmf;
    pmf.p.assign(static_cast<std::size_t>(lag) + 1, 0.0);
    pmf.p.back() = 1.0;
    return pmf;
}

void FeedLink::validate() const
{
    if (!(kappa >= 0.0)) throw DataError("feed kappa must be >= 0");
    if (!(phi > 0.0)) throw DataError("feed phi must be > 0");
    if (lag_weights.empty()) throw DataError("feed lag_weights must be non-empty");
    double sum = 0.0;
    for (double w : lag_weights) {
        if (w < 0.0) throw DataError("feed lag_weights has a negative entry");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > kSimplexTol) throw DataError("feed lag_weights do not sum to 1");
}

void DeathLink::validate() const
{
    if (!(ifr > 0.0) || !(ifr < 1.0)) throw DataError("ifr must lie in (0, 1)");
    if (!(phi > 0.0)) throw DataError("death phi must be > 0");
    delay.validate();
}

namespace {

DateSeries lagged_sum(const DateSeries& i_new, const std::vector<double>& weights, double scale)
{
    DateSeries out = DateSeries::constant(i_new.start, i_new.size(), 0.0);
    const auto n = static_cast<long>(i_new.size());
    const auto n_lags = static_cast<long>(weights.size());
    for (long t = 0; t < n; ++t) {
        double acc = 0.0;
        const long l_max = std::min(n_lags - 1, t);
        for (long l = 0; l <= l_max; ++l) {
            acc += weights[static_cast<std::size_t>(l)] *
                   i_new.values[static_cast<std::size_t>(t - l)];
        }
        out.values[static_cast<std::size_t>(t)] = scale * acc;
    }
    return out;
}

} // namespace

DateSeries death_mean(const DateSeries& i_new, const DeathLink& link)
{
    link.validate();
    return lagged_sum(i_new, link.delay.p, link.ifr);
}

DateSeries feed_mean(const DateSeries& i_new, const FeedLink& link)
{
    link.validate();
    return lagged_sum(i_new, link.lag_weights, link.kappa);
}

double negbin_logpmf(long k, double mean, double phi)
{
    if (k < 0) throw std::invalid_argument("negbin_logpmf requires k >= 0");
    if (!(mean >= 0.0)) throw std::invalid_argument("negbin_logpmf requires mean >= 0");
    if (!(phi > 0.0)) throw std::invalid_argument("negbin_logpmf requires phi > 0");

    if (mean == 0.0) return k == 0 ? 0.0 : kNegInf;

    const double kd = static_cast<double>(k);
    // log C(k+phi-1, k) + phi*log(phi/(phi+mu)) + k*log(mu/(phi+mu)),
    // written with log1p so the phi -> inf Poisson limit stays accurate.
    return std::lgamma(kd + phi) - std::lgamma(phi) - std::lgamma(kd + 1.0) -
           phi * std::log1p(mean / phi) + kd * (std::log(mean) - std::log(mean + phi));
}

long negbin_sample(RngStream& rng, double mean, double phi)
{
    if (!(mean >= 0.0)) throw std::invalid_argument("negbin_sample requires mean >= 0");
    if (!(phi > 0.0)) throw std::invalid_argument("negbin_sample requires phi > 0");
    if (mean == 0.0) return 0;

    const double rate = rng.gamma(phi, mean / phi);
    if (rate <= 0.0) return 0;
    return rng.poisson(rate);
}

double log_likelihood(const ObservedData& obs, const transmission::Trajectory& traj,
                      const DeathLink& death_link,
                      const std::vector<std::pair<std::string, FeedLink>>& feed_links)
{
    const DateSeries& i_new = traj.new_infections;

    auto series_terms = [&](const DateSeries& counts, const DateSeries& mean_series, double phi,
                            const std::string& name) {
        double acc = 0.0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const double v = counts.values[i];
            if (is_missing(v)) continue;
            const Date day = counts.date_at(i);
            if (!mean_series.covers(day)) {
                throw DataError("feed '" + name + "' has an observation on " + day.to_string() +
                                " outside the simulated window");
            }
            const double mu = mean_series.values[mean_series.index_of(day)];
            acc += negbin_logpmf(static_cast<long>(std::llround(v)), mu, phi);
            if (acc == kNegInf) return kNegInf;
        }
        return acc;
    };

    double total = 0.0;
    if (!obs.deaths.empty()) {
        total += series_terms(obs.deaths, death_mean(i_new, death_link), death_link.phi, "deaths");
    }
    for (const ObservedFeed& feed : obs.feeds) {
        if (total == kNegInf) break;
        const FeedLink* link = nullptr;
        for (const auto& [name, fl] : feed_links) {
            if (name == feed.name) {
                link = &fl;
                break;
            }
        }
        if (link == nullptr) throw DataError("no feed link configured for feed '" + feed.name + "'");
        total += series_terms(feed.counts, feed_mean(i_new, *link), link->phi, feed.name);
    }
    return total;
}

DateSeries cumulative_deaths(const DateSeries& i_new, const DeathLink& link)
{
    DateSeries daily = death_mean(i_new, link);
    double acc = 0.0;
    for (double& v : daily.values) {
        acc += v;
        v = acc;
    }
    return daily;
}

} // namespace epifuse::observation
