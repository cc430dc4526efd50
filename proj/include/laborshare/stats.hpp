#pragma once

#include <span>
#include <string>
#include <vector>

#include "laborshare/series.hpp"

namespace laborshare {

struct LinearFit {
    double slope = 0.0; // per year
    double intercept = 0.0;
};

enum class DeclineMode {
    points,   // percentage points of labor share over the window
    relative, // percent of the fitted level at the window start
};

// One country's decline figures over the analysis window.
struct DeclineRecord {
    std::string country;
    std::string source;
    double labor_share_decline_pp = 0.0;
    double median_age_increase_years = 0.0;
    double cognitive_decline_pct = 0.0;           // 50s -> 70s word-recall drop, percent
    double aggregate_cognitive_decline_pct = 0.0; // age increase x decline / 20y
    int window_start = 0;
    int window_end = 0;
    bool outlier = false;
};

// Root mean squared difference over identical year sets.
double rmse(const TimeSeries& observed, const TimeSeries& predicted);

// Least-squares line of value on year.
LinearFit ols_line(const TimeSeries& series);

// Fitted total drop of the labor share over [start, end]. In points mode
// this is -slope * (end - start) * 100.
double labor_share_decline(const CountryDataset& data, int window_start, int window_end,
                           DeclineMode mode = DeclineMode::points);

// age_increase x (100*(s50 - s70)/s50) / 20 years. The 50s vs 70s bands skip
// ages 60-69 and their varying retirement rates.
double aggregate_cognitive_decline(double age_increase_years, const CognitionRecord& cog);

double pearson(std::span<const double> x, std::span<const double> y);

// Least-squares slope with the intercept fixed at zero: sum(xy)/sum(x^2).
double regression_through_origin(std::span<const double> x, std::span<const double> y);

struct Fig10Result {
    double slope_through_origin = 0.0; // labor decline on aggregate cognitive decline
    double r_aggregate_with_usfed = 0.0;
    double r_aggregate_without_usfed = 0.0;
    double r_age_with_usfed = 0.0;
    double r_age_without_usfed = 0.0;
    double r_cognitive_with_usfed = 0.0;
    double r_cognitive_without_usfed = 0.0;
    int records_used = 0; // after exclusions, including the fed point
};

// Marks excluded countries as outliers in place, then computes the
// regression-through-origin trend and the correlation variants on the rest.
// Records with source == "fed" form the "with/without US-Fed" toggle.
Fig10Result fig10_analysis(std::vector<DeclineRecord>& records,
                           const std::vector<std::string>& exclude);

} // namespace laborshare
