#include "epifuse/eval/metrics.hpp"

#include "epifuse/core/errors.hpp"

#include <cmath>

namespace epifuse::eval {

double mae(std::span<const double> pred, std::span<const double> truth)
{
    if (pred.empty()) throw DataError("mae requires at least one prediction");
    if (pred.size() != truth.size()) throw DataError("mae length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        acc += std::fabs(pred[i] - truth[i]);
    }
    return acc / static_cast<double>(pred.size());
}

double mae_pct_diff(double baseline_mae, double candidate_mae)
{
    if (!(baseline_mae > 0.0)) throw DataError("mae_pct_diff requires baseline MAE > 0");
    return 100.0 * (candidate_mae - baseline_mae) / baseline_mae;
}

double nees(std::span<const double> pred_mean, std::span<const double> pred_var,
            std::span<const double> truth)
{
    if (pred_mean.empty()) throw DataError("nees requires at least one prediction");
    if (pred_mean.size() != pred_var.size() || pred_mean.size() != truth.size()) {
        throw DataError("nees length mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < pred_mean.size(); ++i) {
        if (!(pred_var[i] > 0.0)) throw DataError("nees requires positive variances");
        const double e = pred_mean[i] - truth[i];
        acc += e * e / pred_var[i];
    }
    return acc / static_cast<double>(pred_mean.size());
}

} // namespace epifuse::eval
