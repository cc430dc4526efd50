#include "laborshare/fitter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace laborshare {

namespace {

void check_config(const FitConfig& config) {
    if (config.iterations < 1)
        throw DomainError("fit config: iterations must be >= 1");
    if (config.runs < 1)
        throw DomainError("fit config: runs must be >= 1");
    if (!(config.learning_rate > 0.0))
        throw DomainError("fit config: learning rate must be > 0");
    if (!(config.init_low < config.init_high))
        throw DomainError("fit config: init_low must be < init_high");
    if (!(config.projection_margin > 0.0 && config.projection_margin < 0.5))
        throw DomainError("fit config: projection margin must be in (0, 0.5)");
}

void check_data(const CountryDataset& data) {
    if (data.size() < 3)
        throw DataError("fit: need at least 3 aligned points, got " +
                        std::to_string(data.size()));
    if (data.labor_share.size() != data.median_age.size())
        throw DataError("fit: labor and age series have different lengths");
    for (std::size_t i = 0; i < data.size(); ++i)
        if (data.labor_share.points[i].year != data.median_age.points[i].year)
            throw DataError("fit: dataset is not aligned on years");
}

// Age span above the baseline; fixes the feasible region for (r0, k).
double age_span(const CountryDataset& data, double mu0) {
    double mu_max = mu0;
    for (const TimePoint& p : data.median_age.points) mu_max = std::max(mu_max, p.value);
    return mu_max - mu0;
}

// Projects (n, r0, k) into the region where every evaluation along the data
// is defined: n in [eps, 10], r0 in [eps, 1], and k small enough that the
// attenuation denominator stays >= eps and the attenuated ratio stays <= 1
// at the largest age in the data.
void project(ModelParams& params, double span, double eps, long* events) {
    const double n_new = std::clamp(params.n, eps, 10.0);
    const double r0_new = std::clamp(params.r0, eps, 1.0);
    double k_hi = 10.0;
    if (span > 0.0)
        k_hi = std::min((1.0 - eps) / span, (1.0 - r0_new) * (1.0 - 1e-9) / span);
    const double k_new = std::clamp(params.k, 0.0, std::max(k_hi, 0.0));
    if (events != nullptr &&
        (n_new != params.n || r0_new != params.r0 || k_new != params.k))
        ++*events;
    params.n = n_new;
    params.r0 = r0_new;
    params.k = k_new;
}

double mean_squared_error(const ModelParams& params, const CountryDataset& data) {
    double acc = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = residual(params, data.median_age.points[i].value,
                                  data.labor_share.points[i].value);
        acc += r * r;
    }
    return acc / static_cast<double>(data.size());
}

} // namespace

double residual(const ModelParams& params, double median_age, double observed_share) {
    return equilibrium_labor_share(params, median_age) - observed_share;
}

std::array<double, 3> share_gradient(const ModelParams& params, double median_age) {
    const double ratio = attenuated_ratio(params, median_age);
    if (ratio > 1.0)
        throw RangeError("share_gradient: attenuated ratio exceeds 1");
    const double g = ratio / params.r0;
    const double a_pow = std::pow(ratio, params.n);
    return {
        -a_pow * std::log(ratio),
        -params.n * a_pow / params.r0,
        -params.n * a_pow * (median_age - params.mu0) * g,
    };
}

std::array<double, 3> loss_gradient(const ModelParams& params, double median_age,
                                    double observed_share) {
    const double res = residual(params, median_age, observed_share);
    std::array<double, 3> grad = share_gradient(params, median_age);
    for (double& component : grad) component *= 2.0 * res;
    return grad;
}

std::pair<ModelParams, std::vector<double>> fit_single_run(const CountryDataset& data,
                                                           const FitConfig& config, Rng& rng,
                                                           FitWarnings* warnings) {
    check_config(config);
    check_data(data);

    const double mu0 = data.median_age.points.front().value;
    const double span = age_span(data, mu0);
    const double eps = config.projection_margin;
    long* events = warnings != nullptr ? &warnings->projection_events : nullptr;

    ModelParams params;
    params.n = rng.uniform(config.init_low, config.init_high);
    params.r0 = rng.uniform(config.init_low, config.init_high);
    params.k = rng.uniform(config.init_low, config.init_high);
    params.mu0 = mu0;
    project(params, span, eps, events);

    std::vector<int> order(data.size());
    std::iota(order.begin(), order.end(), 0);

    std::vector<double> history;
    history.reserve(static_cast<std::size_t>(config.iterations));
    for (int epoch = 0; epoch < config.iterations; ++epoch) {
        rng.shuffle(order);
        for (const int i : order) {
            std::array<double, 3> grad = loss_gradient(
                params, data.median_age.points[i].value, data.labor_share.points[i].value);
            // Per-component normalization keeps steps bounded through the
            // wild early phase of a [0,1]-random start.
            for (double& component : grad)
                component /= std::max(1.0, std::abs(component));
            params.n -= config.learning_rate * grad[0];
            params.r0 -= config.learning_rate * grad[1];
            params.k -= config.learning_rate * grad[2];
            project(params, span, eps, events);
        }
        const double mse = mean_squared_error(params, data);
        if (!std::isfinite(mse))
            throw NumericError("fit: loss became non-finite at epoch " +
                               std::to_string(epoch) + " (learning rate too high?)");
        history.push_back(mse);
    }
    return {params, history};
}

FitResult fit(const CountryDataset& data, const FitConfig& config) {
    check_config(config);
    check_data(data);

    FitResult result;
    std::string first_failure;
    for (int run = 0; run < config.runs; ++run) {
        Rng rng = Rng::stream(config.seed, static_cast<std::uint64_t>(run));
        try {
            auto [params, history] = fit_single_run(data, config, rng, &result.warnings);
            result.per_run_params.push_back(params);
            result.loss_history.push_back(std::move(history));
        } catch (const Error& e) {
            ++result.warnings.failed_runs;
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    if (result.per_run_params.empty())
        throw NumericError("fit: every run failed; first failure: " + first_failure);

    ModelParams& avg = result.averaged_params;
    avg.mu0 = result.per_run_params.front().mu0;
    for (const ModelParams& p : result.per_run_params) {
        avg.n += p.n;
        avg.r0 += p.r0;
        avg.k += p.k;
    }
    const double count = static_cast<double>(result.per_run_params.size());
    avg.n /= count;
    avg.r0 /= count;
    avg.k /= count;

    result.rmse = std::sqrt(mean_squared_error(avg, data));
    result.fitted_series.label = "fitted";
    for (std::size_t i = 0; i < data.size(); ++i)
        result.fitted_series.points.push_back(
            {data.labor_share.points[i].year,
             equilibrium_labor_share(avg, data.median_age.points[i].value)});
    return result;
}

} // namespace laborshare
