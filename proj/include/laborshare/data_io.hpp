#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "laborshare/model.hpp"
#include "laborshare/series.hpp"

namespace laborshare {

enum class SeriesSchema {
    labor_share, // fractions in (0,1); percent input auto-normalized
    median_age,  // years in (10,60)
};

// Loads a `year,value` CSV under the given schema. UTF-8, `#` comment lines
// ignored. Labor-share files with all values above 1.5 are treated as
// percent and divided by 100 (normalized_from_percent is set on the result).
// Throws DataError with file:line context on parse or validation problems.
TimeSeries load_series(const std::filesystem::path& path, SeriesSchema schema);

// Loads a `country,score_50s,score_70s,year_basis` CSV. Fields may be
// double-quoted. A score_70s above score_50s is flagged, not rejected.
std::vector<CognitionRecord> load_cognition(const std::filesystem::path& path);

// Writes a series as canonical `year,value` CSV (values with up to 12
// significant digits).
void write_series(const TimeSeries& series, std::ostream& out);
void write_series(const TimeSeries& series, const std::filesystem::path& path);

// Inner join on year. Throws DataError if fewer than 3 years are common.
CountryDataset align(const TimeSeries& labor, const TimeSeries& age,
                     const std::string& country = "", const std::string& source = "");

// Labor share generated from the model along an age path plus Gaussian
// noise; deterministic given the seed. The oracle for recovery tests.
CountryDataset synthesize(const ModelParams& params, const TimeSeries& age_path,
                          double noise_sd, std::uint64_t seed);

// One row of a batch manifest (`country,labor_csv,age_csv,source`), with the
// CSV paths already resolved against the manifest's directory.
struct ManifestEntry {
    std::string country;
    std::filesystem::path labor_csv;
    std::filesystem::path age_csv;
    std::string source;
};

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

} // namespace laborshare
