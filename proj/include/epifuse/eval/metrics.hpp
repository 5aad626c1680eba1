#pragma once

#include <span>

namespace epifuse::eval {

/// Mean absolute error over paired predictions and truths.
double mae(std::span<const double> pred, std::span<const double> truth);

/// 100 * (candidate - baseline) / baseline; negative means the candidate
/// improved on the baseline.
double mae_pct_diff(double baseline_mae, double candidate_mae);

/// Normalized estimation error squared for scalar daily forecasts:
/// (1/N) * sum (pred - truth)^2 / var. A consistent forecaster scores ~1;
/// above 1 is overconfident, below 1 overcautious. The D-dimensional form
/// replaces the ratio with a quadratic form through the inverse covariance;
/// only the scalar case is implemented.
double nees(std::span<const double> pred_mean, std::span<const double> pred_var,
            std::span<const double> truth);

} // namespace epifuse::eval
