#pragma once

#include <variant>
#include <vector>

#include "laborshare/model.hpp"
#include "laborshare/series.hpp"

namespace laborshare {

// Constant innovation rates; exponent_n only affects the reported labor
// share column (share = 1 - a^n).
struct FixedRates {
    InnovationRates rates;
    double exponent_n = 1.0;
};

// Median-age path drives sigma/delta through the attenuation law; delta is
// held constant at the given reference rate. t = 0 corresponds to the first
// year of the path and ages are interpolated linearly between annual nodes
// (held constant beyond the ends).
struct AgeDrivenRates {
    ModelParams params;
    TimeSeries median_age;
    double delta = 0.0;
};

struct SimConfig {
    double a_init = 0.0; // initial automation fraction, in [0,1]
    double dt = 0.0;     // step size, years
    double horizon = 0.0;
    std::variant<FixedRates, AgeDrivenRates> rates;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<double> a_values;
    std::vector<double> labor_share_values;
    // Steps whose result had to be clamped back into [0,1]; a nonzero count
    // usually means dt is too coarse for the given rates.
    long clamp_events = 0;
};

/// One explicit Euler step of da/dt = sigma - a*delta.
/// Throws StabilityError if dt*delta >= 1.
double step(double a, const InnovationRates& rates, double dt);

/// Repeated stepping from t=0 to the horizon. The final step is shortened so
/// the trajectory ends exactly at the horizon.
Trajectory simulate(const SimConfig& config);

} // namespace laborshare
