#pragma once

#include "epifuse/core/date.hpp"
#include "epifuse/core/series.hpp"

#include <vector>

namespace epifuse::transmission {

/// Transmission-rate knots are piecewise constant over calendar weeks.
constexpr int kKnotSpanDays = 7;

/// Default sub-steps per day for the fixed-step integrator.
constexpr int kStepsPerDay = 4;

/// Compartment occupancies (person counts, real valued). The latent and
/// infectious stages are split in two so dwell times are Erlang(2) rather
/// than exponential. D is carried for reporting; the integrator never flows
/// mass into it (deaths are attributed downstream via a delay convolution).
struct CompartmentState {
    double S = 0.0;
    double E1 = 0.0;
    double E2 = 0.0;
    double I1 = 0.0;
    double I2 = 0.0;
    double R = 0.0;
    double D = 0.0;

    double total() const { return S + E1 + E2 + I1 + I2 + R + D; }
};

struct TransmissionParams {
    double population = 0.0;            // N, persons
    double initial_seed = 0.0;          // persons placed in E1 at t0
    std::vector<double> beta_knots;     // weekly contact rates, 1/day
    double latent_days = 0.0;           // dL, mean latent period
    double infectious_days = 0.0;       // dI, mean infectious period

    /// Throws DataError when a field violates its range.
    void validate() const;
};

/// Piecewise-constant weekly transmission rate; t beyond the last knot reads
/// the last knot.
double beta_at(const TransmissionParams& params, double t);

/// ODE right-hand side. Component-wise sum is zero (closed population).
CompartmentState derivatives(const CompartmentState& state, double beta,
                             const TransmissionParams& params);

/// One classical RK4 step from time t over dt days. Negative components from
/// floating-point drift are clamped to zero with the deficit taken from S so
/// total mass is unchanged. Throws NumericError when dt <= 0.
CompartmentState step_rk4(const CompartmentState& state, const TransmissionParams& params,
                          double t, double dt);

struct Trajectory {
    Date start;
    std::vector<CompartmentState> states; // one per day boundary, states[0] at t0
    DateSeries new_infections;            // i_new(t) = S(t-1) - S(t), i_new(0) = 0

    std::size_t n_days() const { return states.size(); }
};

/// Integrates `horizon` days from t0 with steps_per_day sub-steps, recording
/// each day boundary (horizon + 1 states). Initial state: S = N - seed,
/// E1 = seed. Throws NumericError when horizon < 1.
Trajectory simulate(const TransmissionParams& params, Date t0, int horizon,
                    int steps_per_day = kStepsPerDay);

/// Convenience instantaneous reproduction number beta * dI * S / N.
double reproduction_number(const TransmissionParams& params, const CompartmentState& state,
                           double t);

} // namespace epifuse::transmission
