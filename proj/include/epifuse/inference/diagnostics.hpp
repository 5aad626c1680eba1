#pragma once

#include <vector>

namespace epifuse::inference {

/// Split-Rhat for one parameter given per-chain draw sequences. Requires at
/// least 2 chains of at least 4 draws. Chains with zero total variance return
/// 1.0 by convention.
double split_rhat(const std::vector<std::vector<double>>& chains);

/// Effective sample size for one parameter (combined-chain autocorrelation
/// with Geyer initial-monotone truncation).
double effective_sample_size(const std::vector<std::vector<double>>& chains);

} // namespace epifuse::inference
