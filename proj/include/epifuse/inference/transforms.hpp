#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace epifuse::inference {

// Bijections between constrained parameter values and the unconstrained
// sampling space, with the log-Jacobian corrections the posterior needs.
// Round-tripping any interior point is the identity to ~1e-10.

/// v > 0  <->  x = log v.
double positive_constrain(double x);
double positive_unconstrain(double v);
/// log |dv/dx| at unconstrained x.
double positive_log_jacobian(double x);

/// v in (0,1)  <->  x = logit v.
double unit_constrain(double x);
double unit_unconstrain(double v);
double unit_log_jacobian(double x);

/// Simplex of size K  <->  K-1 unconstrained stick-breaking coordinates.
std::vector<double> simplex_constrain(std::span<const double> y);
std::vector<double> simplex_unconstrain(std::span<const double> w);
double simplex_log_jacobian(std::span<const double> y);

} // namespace epifuse::inference
