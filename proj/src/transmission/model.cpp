#include "epifuse/transmission/model.hpp"

#include "epifuse/core/errors.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace epifuse::transmission {

void TransmissionParams::validate() const
{
    if (!(population > 0.0)) throw DataError("population must be > 0");
    if (!(initial_seed > 0.0) || !(initial_seed < population)) {
        throw DataError("initial_seed must lie in (0, population)");
    }
    if (beta_knots.empty()) throw DataError("beta_knots must be non-empty");
    for (double b : beta_knots) {
        if (!(b > 0.0)) throw DataError("beta_knots must all be > 0");
    }
    if (!(latent_days > 0.0)) throw DataError("latent_days must be > 0");
    if (!(infectious_days > 0.0)) throw DataError("infectious_days must be > 0");
}

double beta_at(const TransmissionParams& params, double t)
{
    const auto k = static_cast<std::size_t>(std::max(0.0, std::floor(t / kKnotSpanDays)));
    if (k >= params.beta_knots.size()) return params.beta_knots.back();
    return params.beta_knots[k];
}

CompartmentState derivatives(const CompartmentState& state, double beta,
                             const TransmissionParams& params)
{
    const double lambda = beta * (state.I1 + state.I2) / params.population;
    const double rE = 2.0 / params.latent_days;
    const double rI = 2.0 / params.infectious_days;

    CompartmentState d;
    d.S = -lambda * state.S;
    d.E1 = lambda * state.S - rE * state.E1;
    d.E2 = rE * state.E1 - rE * state.E2;
    d.I1 = rE * state.E2 - rI * state.I1;
    d.I2 = rI * state.I1 - rI * state.I2;
    d.R = rI * state.I2;
    d.D = 0.0;
    return d;
}

namespace {

CompartmentState axpy(const CompartmentState& y, double a, const CompartmentState& x)
{
    CompartmentState r;
    r.S = y.S + a * x.S;
    r.E1 = y.E1 + a * x.E1;
    r.E2 = y.E2 + a * x.E2;
    r.I1 = y.I1 + a * x.I1;
    r.I2 = y.I2 + a * x.I2;
    r.R = y.R + a * x.R;
    r.D = y.D + a * x.D;
    return r;
}

void clamp_negative_to_susceptible(CompartmentState& s)
{
    double deficit = 0.0;
    auto clamp = [&deficit](double& v) {
        if (v < 0.0) {
            deficit += -v;
            v = 0.0;
        }
    };
    clamp(s.E1);
    clamp(s.E2);
    clamp(s.I1);
    clamp(s.I2);
    clamp(s.R);
    clamp(s.D);
    s.S -= deficit;
    if (s.S < 0.0) s.S = 0.0;
}

} // namespace

CompartmentState step_rk4(const CompartmentState& state, const TransmissionParams& params,
                          double t, double dt)
{
    if (!(dt > 0.0)) throw NumericError("step_rk4 requires dt > 0");

    const CompartmentState k1 = derivatives(state, beta_at(params, t), params);
    const CompartmentState k2 =
        derivatives(axpy(state, dt / 2.0, k1), beta_at(params, t + dt / 2.0), params);
    const CompartmentState k3 =
        derivatives(axpy(state, dt / 2.0, k2), beta_at(params, t + dt / 2.0), params);
    const CompartmentState k4 = derivatives(axpy(state, dt, k3), beta_at(params, t + dt), params);

    CompartmentState next = state;
    next = axpy(next, dt / 6.0, k1);
    next = axpy(next, dt / 3.0, k2);
    next = axpy(next, dt / 3.0, k3);
    next = axpy(next, dt / 6.0, k4);

    clamp_negative_to_susceptible(next);
    return next;
}

Trajectory simulate(const TransmissionParams& params, Date t0, int horizon, int steps_per_day)
{
    params.validate();
    if (horizon < 1) throw NumericError("simulate requires horizon >= 1");
    if (steps_per_day < 1) throw NumericError("simulate requires steps_per_day >= 1");

    Trajectory traj;
    traj.start = t0;
    traj.states.reserve(static_cast<std::size_t>(horizon) + 1);

    CompartmentState state;
    state.S = params.population - params.initial_seed;
    state.E1 = params.initial_seed;
    traj.states.push_back(state);

    const double dt = 1.0 / steps_per_day;
    for (int day = 0; day < horizon; ++day) {
        for (int sub = 0; sub < steps_per_day; ++sub) {
            state = step_rk4(state, params, day + sub * dt, dt);
            if (!std::isfinite(state.total())) {
                throw NumericError("simulate produced a non-finite state at day " +
                                   std::to_string(day + 1));
            }
        }
        traj.states.push_back(state);
    }

    std::vector<double> i_new(traj.states.size(), 0.0);
    for (std::size_t d = 1; d < traj.states.size(); ++d) {
        i_new[d] = std::max(0.0, traj.states[d - 1].S - traj.states[d].S);
    }
    traj.new_infections = DateSeries(t0, std::move(i_new));
    return traj;
}

double reproduction_number(const TransmissionParams& params, const CompartmentState& state,
                           double t)
{
    return beta_at(params, t) * params.infectious_days * state.S / params.population;
}

} // namespace epifuse::transmission
