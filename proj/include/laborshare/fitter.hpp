#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "laborshare/model.hpp"
#include "laborshare/rng.hpp"
#include "laborshare/series.hpp"

namespace laborshare {

struct FitConfig {
    int iterations = 100;          // epochs per run; one epoch = one shuffled full pass
    int runs = 20;                 // independent random restarts, averaged
    double learning_rate = 0.05;
    std::uint64_t seed = 64;
    double init_low = 0.0;         // initialization interval for n, r0, k
    double init_high = 1.0;
    double projection_margin = 1e-6;
};

struct FitWarnings {
    long projection_events = 0; // updates where the projection moved a parameter
    int failed_runs = 0;
};

struct FitResult {
    std::vector<ModelParams> per_run_params;
    ModelParams averaged_params;                  // componentwise mean over runs
    std::vector<std::vector<double>> loss_history; // per run, per-epoch MSE
    double rmse = 0.0;                             // of averaged params on the data
    TimeSeries fitted_series;                      // predictions of averaged params
    FitWarnings warnings;
};

/// Model prediction minus observation at one (median age, share) point.
double residual(const ModelParams& params, double median_age, double observed_share);

/// Derivatives of the equilibrium labor share with respect to (n, r0, k).
/// With g = 1/(1 - k*(mu - mu0)) and A = (r0*g)^n:
///   d/dn = -A*ln(r0*g),  d/dr0 = -n*A/r0,  d/dk = -n*A*(mu - mu0)*g
std::array<double, 3> share_gradient(const ModelParams& params, double median_age);

/// Gradient of the squared residual: 2 * residual * share_gradient.
std::array<double, 3> loss_gradient(const ModelParams& params, double median_age,
                                    double observed_share);

/// One SGD run from a random initialization in [init_low, init_high]^3.
/// Returns the final parameters and the per-epoch MSE trace. The caller's
/// rng drives initialization and the per-epoch shuffles.
std::pair<ModelParams, std::vector<double>> fit_single_run(const CountryDataset& data,
                                                           const FitConfig& config, Rng& rng,
                                                           FitWarnings* warnings = nullptr);

/// The full protocol: `runs` independent SGD runs, parameters averaged
/// componentwise, RMSE and fitted series computed from the average.
/// Deterministic given the seed.
FitResult fit(const CountryDataset& data, const FitConfig& config);

} // namespace laborshare
