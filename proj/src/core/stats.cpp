#include "epifuse/core/stats.hpp"

#include "epifuse/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace epifuse::stats {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double logit(double p)
{
    return std::log(p) - std::log1p(-p);
}

double inv_logit(double x)
{
    // Evaluate via the negative branch so large |x| cannot overflow.
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double normal_lpdf(double x, double mean, double sd)
{
    const double z = (x - mean) / sd;
    return -0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * M_PI);
}

double gamma_lpdf(double x, double shape, double rate)
{
    if (x <= 0.0) return kNegInf;
    return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) - rate * x;
}

double beta_lpdf(double x, double a, double b)
{
    if (x <= 0.0 || x >= 1.0) return kNegInf;
    const double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lbeta;
}

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x)
{
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) = 1 - P(a, x), valid for x >= a + 1.
double gamma_q_contfrac(double a, double x)
{
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_p(double a, double x)
{
    if (a <= 0.0) throw NumericError("gamma_p requires a > 0");
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double gamma_cdf(double x, double shape, double scale)
{
    if (x <= 0.0) return 0.0;
    return gamma_p(shape, x / scale);
}

double mean(std::span<const double> v)
{
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double variance(std::span<const double> v)
{
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double quantile(std::vector<double> v, double p)
{
    if (v.empty()) throw NumericError("quantile of empty sample");
    std::sort(v.begin(), v.end());
    p = std::clamp(p, 0.0, 1.0);
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return v[lo] * (1.0 - frac) + v[hi] * frac;
}

} // namespace epifuse::stats
