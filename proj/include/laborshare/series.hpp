#pragma once

#include <string>
#include <vector>

#include "laborshare/errors.hpp"

namespace laborshare {

struct TimePoint {
    int year;
    double value;
};

// Year-indexed scalar series. Years are strictly increasing.
struct TimeSeries {
    std::string label;
    std::vector<TimePoint> points;
    bool normalized_from_percent = false;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    int first_year() const { return points.front().year; }
    int last_year() const { return points.back().year; }

    // Value at an exact year; throws DataError if the year is absent.
    double value_at(int year) const;
    // Linear interpolation between annual nodes, clamped at the ends.
    double interpolate(double year) const;

    // Throws DataError naming the violated invariant.
    void validate() const;
};

// Aligned labor-share and median-age series for one economy.
struct CountryDataset {
    std::string country;
    std::string source;       // provenance tag, e.g. "fed", "klems2013"
    TimeSeries labor_share;   // fractions in (0,1)
    TimeSeries median_age;    // years
    int dropped_labor_years = 0;
    int dropped_age_years = 0;

    std::size_t size() const { return labor_share.size(); }
};

// Per-country average cognitive scores by age band.
struct CognitionRecord {
    std::string country;
    double score_50s = 0.0;
    double score_70s = 0.0;
    std::string year_basis;
    // Set when score_70s > score_50s; recorded, never fatal.
    bool score_increase_flag = false;
};

} // namespace laborshare
