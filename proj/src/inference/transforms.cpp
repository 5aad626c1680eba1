#include "epifuse/inference/transforms.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/stats.hpp"

#include <cmath>

namespace epifuse::inference {

double positive_constrain(double x)
{
    return std::exp(x);
}

double positive_unconstrain(double v)
{
    if (!(v > 0.0)) throw NumericError("positive_unconstrain requires v > 0");
    return std::log(v);
}

double positive_log_jacobian(double x)
{
    return x;
}

double unit_constrain(double x)
{
    return stats::inv_logit(x);
}

double unit_unconstrain(double v)
{
    if (!(v > 0.0) || !(v < 1.0)) throw NumericError("unit_unconstrain requires v in (0, 1)");
    return stats::logit(v);
}

double unit_log_jacobian(double x)
{
    const double v = stats::inv_logit(x);
    return std::log(v) + std::log1p(-v);
}

std::vector<double> simplex_constrain(std::span<const double> y)
{
    const std::size_t km1 = y.size();
    std::vector<double> w(km1 + 1);
    double stick = 1.0;
    for (std::size_t k = 0; k < km1; ++k) {
        const double z = stats::inv_logit(y[k] - std::log(static_cast<double>(km1 - k)));
        w[k] = stick * z;
        stick -= w[k];
    }
    w[km1] = stick;
    return w;
}

std::vector<double> simplex_unconstrain(std::span<const double> w)
{
    if (w.size() < 2) throw NumericError("simplex_unconstrain requires K >= 2");
    const std::size_t km1 = w.size() - 1;
    std::vector<double> y(km1);
    double stick = 1.0;
    for (std::size_t k = 0; k < km1; ++k) {
        if (!(w[k] > 0.0) || !(w[k] < stick)) {
            throw NumericError("simplex_unconstrain requires an interior simplex point");
        }
        const double z = w[k] / stick;
        y[k] = stats::logit(z) + std::log(static_cast<double>(km1 - k));
        stick -= w[k];
    }
    return y;
}

double simplex_log_jacobian(std::span<const double> y)
{
    const std::size_t km1 = y.size();
    double lj = 0.0;
    double stick = 1.0;
    for (std::size_t k = 0; k < km1; ++k) {
        const double z = stats::inv_logit(y[k] - std::log(static_cast<double>(km1 - k)));
        lj += std::log(z) + std::log1p(-z) + std::log(stick);
        stick -= stick * z;
    }
    return lj;
}

} // namespace epifuse::inference
