#include "epifuse/inference/diagnostics.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/stats.hpp"

#include <algorithm>
#include <cmath>

namespace epifuse::inference {

namespace {

// Splits every chain in half, dropping the middle draw of odd-length chains.
std::vector<std::vector<double>> split_chains(const std::vector<std::vector<double>>& chains)
{
    std::vector<std::vector<double>> halves;
    halves.reserve(chains.size() * 2);
    for (const auto& c : chains) {
        const std::size_t half = c.size() / 2;
        halves.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
        halves.emplace_back(c.end() - static_cast<std::ptrdiff_t>(half), c.end());
    }
    return halves;
}

struct Anova {
    double w = 0.0;        // mean within-sequence variance
    double var_plus = 0.0; // pooled posterior variance estimate
    std::size_t n = 0;     // per-sequence length
    std::size_t m = 0;     // number of sequences
    bool degenerate = false;
};

Anova sequence_anova(const std::vector<std::vector<double>>& seqs)
{
    Anova a;
    a.m = seqs.size();
    a.n = seqs.front().size();

    std::vector<double> means(a.m);
    double w = 0.0;
    for (std::size_t j = 0; j < a.m; ++j) {
        means[j] = stats::mean(seqs[j]);
        w += stats::variance(seqs[j]);
    }
    w /= static_cast<double>(a.m);

    const double b_over_n = stats::variance(means); // B/n
    a.w = w;
    const auto n = static_cast<double>(a.n);
    a.var_plus = (n - 1.0) / n * w + b_over_n;
    a.degenerate = w <= 0.0 && b_over_n <= 0.0;
    return a;
}

} // namespace

double split_rhat(const std::vector<std::vector<double>>& chains)
{
    if (chains.size() < 2) throw NumericError("split_rhat requires at least 2 chains");
    for (const auto& c : chains) {
        if (c.size() < 4) throw NumericError("split_rhat requires at least 4 draws per chain");
    }

    const auto halves = split_chains(chains);
    const Anova a = sequence_anova(halves);
    if (a.degenerate) return 1.0; // all sequences constant and equal
    if (a.w <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(a.var_plus / a.w);
}

double effective_sample_size(const std::vector<std::vector<double>>& chains)
{
    if (chains.empty()) throw NumericError("effective_sample_size requires at least 1 chain");
    const std::size_t n = chains.front().size();
    if (n < 4) throw NumericError("effective_sample_size requires at least 4 draws");

    const Anova a = sequence_anova(chains);
    const auto m = static_cast<double>(chains.size());
    const auto total = m * static_cast<double>(n);
    if (a.degenerate || a.var_plus <= 0.0) return total;

    // Chain-averaged autocovariance at each lag (biased 1/n estimator).
    std::vector<std::vector<double>> centered(chains.size());
    for (std::size_t j = 0; j < chains.size(); ++j) {
        const double mu = stats::mean(chains[j]);
        centered[j].resize(n);
        for (std::size_t t = 0; t < n; ++t) centered[j][t] = chains[j][t] - mu;
    }
    auto mean_autocov = [&](std::size_t lag) {
        double acc = 0.0;
        for (const auto& c : centered) {
            double s = 0.0;
            for (std::size_t t = lag; t < n; ++t) s += c[t] * c[t - lag];
            acc += s / static_cast<double>(n);
        }
        return acc / m;
    };

    // rho_t = 1 - (W - mean autocov_t) / var_plus, summed over Geyer
    // initial-monotone positive pairs.
    double tau = 1.0; // rho_0 contribution
    double prev_pair = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t + 1 < n; t += 2) {
        const double rho_a = 1.0 - (a.w - mean_autocov(t)) / a.var_plus;
        const double rho_b = 1.0 - (a.w - mean_autocov(t + 1)) / a.var_plus;
        double pair = rho_a + rho_b;
        if (pair < 0.0) break;
        pair = std::min(pair, prev_pair);
        prev_pair = pair;
        tau += 2.0 * pair;
        if (t > 2000) break; // lag cap; longer correlations are noise here
    }
    return std::max(1.0, total / tau);
}

} // namespace epifuse::inference
