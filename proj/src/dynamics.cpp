#include "laborshare/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace laborshare {

double step(double a, const InnovationRates& rates, double dt) {
    validate(rates);
    if (!(a >= 0.0 && a <= 1.0))
        throw DomainError("step: automation fraction must be in [0,1]");
    if (!(dt > 0.0))
        throw DomainError("step: dt must be > 0");
    if (dt * rates.delta >= 1.0) {
        std::ostringstream msg;
        msg << "step: dt*delta = " << dt * rates.delta << " >= 1, explicit Euler unstable";
        throw StabilityError(msg.str());
    }
    return a + dt * (rates.sigma - a * rates.delta);
}

namespace {

struct RateSource {
    const SimConfig& config;

    double delta() const {
        if (const auto* fixed = std::get_if<FixedRates>(&config.rates))
            return fixed->rates.delta;
        return std::get<AgeDrivenRates>(config.rates).delta;
    }

    double exponent() const {
        if (const auto* fixed = std::get_if<FixedRates>(&config.rates))
            return fixed->exponent_n;
        return std::get<AgeDrivenRates>(config.rates).params.n;
    }

    InnovationRates at(double t) const {
        if (const auto* fixed = std::get_if<FixedRates>(&config.rates))
            return fixed->rates;
        const auto& driven = std::get<AgeDrivenRates>(config.rates);
        const double year = driven.median_age.first_year() + t;
        const double mu = driven.median_age.interpolate(year);
        const double ratio = attenuated_ratio(driven.params, mu);
        if (ratio > 1.0)
            throw RangeError("simulate: attenuated ratio exceeds 1 along the age path");
        return {ratio * driven.delta, driven.delta};
    }
};

} // namespace

Trajectory simulate(const SimConfig& config) {
    if (!(config.a_init >= 0.0 && config.a_init <= 1.0))
        throw DomainError("simulate: a_init must be in [0,1]");
    if (!(config.dt > 0.0) || !(config.horizon > 0.0))
        throw DomainError("simulate: dt and horizon must be > 0");

    const RateSource source{config};
    if (config.dt * source.delta() >= 1.0)
        throw StabilityError("simulate: dt*delta >= 1, explicit Euler unstable");
    if (const auto* driven = std::get_if<AgeDrivenRates>(&config.rates)) {
        if (driven->median_age.empty())
            throw DataError("simulate: empty median-age path");
        validate(driven->params);
    }

    const double n = source.exponent();
    Trajectory traj;
    const auto record = [&](double t, double a) {
        traj.times.push_back(t);
        traj.a_values.push_back(a);
        traj.labor_share_values.push_back(1.0 - std::pow(a, n));
    };

    const long n_steps =
        static_cast<long>(std::ceil(config.horizon / config.dt - 1e-9));
    double a = config.a_init;
    record(0.0, a);
    for (long i = 0; i < n_steps; ++i) {
        const double t0 = static_cast<double>(i) * config.dt;
        const double t1 = std::min(static_cast<double>(i + 1) * config.dt, config.horizon);
        a = step(a, source.at(t0), t1 - t0);
        if (a < 0.0 || a > 1.0) {
            a = std::min(std::max(a, 0.0), 1.0);
            ++traj.clamp_events;
        }
        record(t1, a);
    }
    return traj;
}

} // namespace laborshare
