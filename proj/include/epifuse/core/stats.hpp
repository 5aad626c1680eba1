#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace epifuse::stats {

double logit(double p);
double inv_logit(double x);

double normal_lpdf(double x, double mean, double sd);
double gamma_lpdf(double x, double shape, double rate);
double beta_lpdf(double x, double a, double b);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// CDF of Gamma(shape, scale) at x.
double gamma_cdf(double x, double shape, double scale);

double mean(std::span<const double> v);

/// Sample variance (n - 1 denominator).
double variance(std::span<const double> v);

/// Linear-interpolation quantile of an unsorted sample, p in [0, 1].
double quantile(std::vector<double> v, double p);

} // namespace epifuse::stats
