#include "laborshare/stats.hpp"

#include <algorithm>
#include <cmath>

namespace laborshare {

double rmse(const TimeSeries& observed, const TimeSeries& predicted) {
    if (observed.size() != predicted.size())
        throw DataError("rmse: series have different lengths");
    if (observed.empty())
        throw DataError("rmse: empty series");
    double acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (observed.points[i].year != predicted.points[i].year)
            throw DataError("rmse: year sets differ at " +
                            std::to_string(observed.points[i].year) + " vs " +
                            std::to_string(predicted.points[i].year));
        const double d = observed.points[i].value - predicted.points[i].value;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(observed.size()));
}

LinearFit ols_line(const TimeSeries& series) {
    if (series.size() < 2)
        throw DataError("ols_line: need at least 2 points");
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (const TimePoint& p : series.points) {
        x_mean += p.year;
        y_mean += p.value;
    }
    const double count = static_cast<double>(series.size());
    x_mean /= count;
    y_mean /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (const TimePoint& p : series.points) {
        sxy += (p.year - x_mean) * (p.value - y_mean);
        sxx += (p.year - x_mean) * (p.year - x_mean);
    }
    if (sxx == 0.0)
        throw NumericError("ols_line: all years equal, slope undefined");
    const double slope = sxy / sxx;
    return {slope, y_mean - slope * x_mean};
}

double labor_share_decline(const CountryDataset& data, int window_start, int window_end,
                           DeclineMode mode) {
    if (window_start >= window_end)
        throw DomainError("labor_share_decline: window start must precede end");
    TimeSeries inside;
    inside.label = data.labor_share.label;
    for (const TimePoint& p : data.labor_share.points)
        if (p.year >= window_start && p.year <= window_end) inside.points.push_back(p);
    if (inside.size() < 2)
        throw DataError("labor_share_decline: fewer than 2 points in window " +
                        std::to_string(window_start) + "-" + std::to_string(window_end));
    const LinearFit line = ols_line(inside);
    const double drop = -line.slope * static_cast<double>(window_end - window_start);
    if (mode == DeclineMode::points) return drop * 100.0;
    const double start_level = line.slope * window_start + line.intercept;
    if (!(start_level > 0.0))
        throw NumericError("labor_share_decline: non-positive fitted level at window start");
    return 100.0 * drop / start_level;
}

double aggregate_cognitive_decline(double age_increase_years, const CognitionRecord& cog) {
    if (!(cog.score_50s > 0.0))
        throw DomainError("aggregate_cognitive_decline: score_50s must be positive");
    if (!std::isfinite(age_increase_years))
        throw DomainError("aggregate_cognitive_decline: age increase must be finite");
    const double decline_pct = 100.0 * (cog.score_50s - cog.score_70s) / cog.score_50s;
    return age_increase_years * decline_pct / 20.0;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DomainError("pearson: size mismatch");
    if (x.size() < 2)
        throw DomainError("pearson: need at least 2 points");
    const double count = static_cast<double>(x.size());
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x_mean += x[i];
        y_mean += y[i];
    }
    x_mean /= count;
    y_mean /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - x_mean) * (y[i] - y_mean);
        sxx += (x[i] - x_mean) * (x[i] - x_mean);
        syy += (y[i] - y_mean) * (y[i] - y_mean);
    }
    if (sxx == 0.0 || syy == 0.0)
        throw NumericError("pearson: zero variance");
    return sxy / std::sqrt(sxx * syy);
}

double regression_through_origin(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DomainError("regression_through_origin: size mismatch");
    if (x.empty())
        throw DomainError("regression_through_origin: empty input");
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
    }
    if (sxx == 0.0)
        throw NumericError("regression_through_origin: all x are zero");
    return sxy / sxx;
}

Fig10Result fig10_analysis(std::vector<DeclineRecord>& records,
                           const std::vector<std::string>& exclude) {
    for (DeclineRecord& rec : records)
        rec.outlier = std::find(exclude.begin(), exclude.end(), rec.country) != exclude.end();

    std::vector<double> labor_all, agg_all, age_all, cog_all;
    std::vector<double> labor_nf, agg_nf, age_nf, cog_nf; // without the fed point
    for (const DeclineRecord& rec : records) {
        if (rec.outlier) continue;
        labor_all.push_back(rec.labor_share_decline_pp);
        agg_all.push_back(rec.aggregate_cognitive_decline_pct);
        age_all.push_back(rec.median_age_increase_years);
        cog_all.push_back(rec.cognitive_decline_pct);
        if (rec.source != "fed") {
            labor_nf.push_back(rec.labor_share_decline_pp);
            agg_nf.push_back(rec.aggregate_cognitive_decline_pct);
            age_nf.push_back(rec.median_age_increase_years);
            cog_nf.push_back(rec.cognitive_decline_pct);
        }
    }
    if (labor_all.size() < 3 || labor_nf.size() < 3)
        throw DataError("fig10_analysis: fewer than 3 usable records after exclusions");

    Fig10Result out;
    out.records_used = static_cast<int>(labor_all.size());
    out.slope_through_origin = regression_through_origin(agg_all, labor_all);
    out.r_aggregate_with_usfed = pearson(agg_all, labor_all);
    out.r_aggregate_without_usfed = pearson(agg_nf, labor_nf);
    out.r_age_with_usfed = pearson(age_all, labor_all);
    out.r_age_without_usfed = pearson(age_nf, labor_nf);
    out.r_cognitive_with_usfed = pearson(cog_all, labor_all);
    out.r_cognitive_without_usfed = pearson(cog_nf, labor_nf);
    return out;
}

} // namespace laborshare
