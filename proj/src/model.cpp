#include "laborshare/model.hpp"

#include <cmath>
#include <sstream>

namespace laborshare {

void validate(const ModelParams& params) {
    if (!(params.n > 0.0))
        throw DomainError("model params: n must be > 0, got " + std::to_string(params.n));
    if (!(params.r0 > 0.0 && params.r0 <= 1.0))
        throw DomainError("model params: r0 must be in (0,1], got " + std::to_string(params.r0));
    if (!(params.k >= 0.0))
        throw DomainError("model params: k must be >= 0, got " + std::to_string(params.k));
    if (!std::isfinite(params.mu0))
        throw DomainError("model params: mu0 must be finite");
}

void validate(const InnovationRates& rates) {
    if (!(rates.delta > 0.0))
        throw DomainError("innovation rates: delta must be > 0");
    if (!(rates.sigma >= 0.0))
        throw DomainError("innovation rates: sigma must be >= 0");
}

double cumulative_output_share(double rank_fraction, double n) {
    if (!(n > 0.0))
        throw DomainError("cumulative_output_share: n must be > 0");
    if (!(rank_fraction >= 0.0 && rank_fraction <= 1.0))
        throw DomainError("cumulative_output_share: rank fraction must be in [0,1]");
    return std::pow(rank_fraction, n);
}

double attenuated_ratio(const ModelParams& params, double median_age) {
    validate(params);
    const double denom = 1.0 - params.k * (median_age - params.mu0);
    if (!(denom > 0.0)) {
        std::ostringstream msg;
        msg << "attenuated_ratio: attenuation denominator " << denom << " at median age "
            << median_age << " (mu0 " << params.mu0 << ", k " << params.k << ")";
        throw SingularityError(msg.str());
    }
    return params.r0 / denom;
}

double equilibrium_labor_share(const ModelParams& params, double median_age) {
    const double ratio = attenuated_ratio(params, median_age);
    if (ratio > 1.0) {
        std::ostringstream msg;
        msg << "equilibrium_labor_share: attenuated ratio " << ratio
            << " exceeds 1 at median age " << median_age;
        throw RangeError(msg.str());
    }
    return 1.0 - std::pow(ratio, params.n);
}

double mixture_labor_share(std::span<const ProductLine> lines) {
    if (lines.empty())
        throw DomainError("mixture_labor_share: empty product list");
    double weight_sum = 0.0;
    double wage_value = 0.0;
    double total_value = 0.0;
    for (const ProductLine& line : lines) {
        if (!(line.price > 0.0))
            throw DomainError("mixture_labor_share: price must be > 0");
        if (!(line.unit_labor_share >= 0.0 && line.unit_labor_share <= 1.0))
            throw DomainError("mixture_labor_share: unit labor share must be in [0,1]");
        if (!(line.demand_weight >= 0.0 && line.demand_weight <= 1.0))
            throw DomainError("mixture_labor_share: demand weight must be in [0,1]");
        weight_sum += line.demand_weight;
        wage_value += line.demand_weight * line.unit_labor_share * line.price;
        total_value += line.demand_weight * line.price;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw DomainError("mixture_labor_share: demand weights sum to " +
                          std::to_string(weight_sum) + ", expected 1");
    return wage_value / total_value;
}

} // namespace laborshare
