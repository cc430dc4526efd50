#pragma once

#include <span>

#include "laborshare/errors.hpp"

namespace laborshare {

// The three fitted parameters plus the baseline median age.
//   n   : long-tail exponent of the cumulative output share, > 0
//   r0  : baseline innovation ratio sigma0/delta0, in (0, 1]
//   k   : age attenuation coefficient per year of median age, >= 0
//   mu0 : baseline median age (years)
struct ModelParams {
    double n = 0.0;
    double r0 = 0.0;
    double k = 0.0;
    double mu0 = 0.0;
};

struct InnovationRates {
    double sigma = 0.0; // supply innovation rate, >= 0
    double delta = 0.0; // demand innovation rate, > 0
};

// One product in the worked mixture example.
struct ProductLine {
    double price = 0.0;            // currency per unit, > 0
    double unit_labor_share = 0.0; // fraction in [0,1]
    double demand_weight = 0.0;    // fraction in [0,1]; weights sum to 1
};

// Throws DomainError if the static parameter invariants are violated.
void validate(const ModelParams& params);
void validate(const InnovationRates& rates);

/// Cumulative output share of tasks up to rank fraction r: r^n.
double cumulative_output_share(double rank_fraction, double n);

/// Innovation ratio sigma/delta at median age mu: r0 / (1 - k*(mu - mu0)).
/// Throws SingularityError when the attenuation denominator is not positive.
double attenuated_ratio(const ModelParams& params, double median_age);

/// Equilibrium labor share at median age mu: 1 - [attenuated ratio]^n.
/// Throws RangeError when the attenuated ratio exceeds 1.
double equilibrium_labor_share(const ModelParams& params, double median_age);

/// Demand-weighted aggregate labor share of a product mixture:
/// sum(w*s*p) / sum(w*p).
double mixture_labor_share(std::span<const ProductLine> lines);

} // namespace laborshare
