#include "laborshare/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "laborshare/report.hpp"
#include "laborshare/rng.hpp"

namespace laborshare {

namespace {

std::string location(const std::filesystem::path& path, int line) {
    return path.string() + ":" + std::to_string(line);
}

// Raw lines with their 1-based numbers, comments and blank lines dropped.
std::vector<std::pair<int, std::string>> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open " + path.string());
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        lines.emplace_back(number, raw);
    }
    return lines;
}

// Comma splitter with minimal double-quote support ("" inside quotes is a
// literal quote).
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"') {
            if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
                current += '"';
                ++i;
            } else {
                quoted = !quoted;
            }
        } else if (c == ',' && !quoted) {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    for (std::string& f : fields) {
        const auto a = f.find_first_not_of(" \t");
        const auto b = f.find_last_not_of(" \t");
        f = a == std::string::npos ? std::string() : f.substr(a, b - a + 1);
    }
    return fields;
}

int parse_year(const std::string& text, const std::filesystem::path& path, int line) {
    int year = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw DataError(location(path, line) + ": expected integer year, got '" + text + "'");
    return year;
}

double parse_value(const std::string& text, const std::filesystem::path& path, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw DataError(location(path, line) + ": expected number, got '" + text + "'");
    }
}

void expect_header(const std::vector<std::pair<int, std::string>>& lines,
                   const std::string& expected, const std::filesystem::path& path) {
    if (lines.empty())
        throw DataError(path.string() + ": empty file");
    std::string got = lines.front().second;
    got.erase(std::remove_if(got.begin(), got.end(),
                             [](unsigned char c) { return c == ' ' || c == '\t'; }),
              got.end());
    if (got != expected)
        throw DataError(location(path, lines.front().first) + ": expected header '" +
                        expected + "', got '" + lines.front().second + "'");
}

} // namespace

double TimeSeries::value_at(int year) const {
    for (const TimePoint& p : points)
        if (p.year == year) return p.value;
    throw DataError("series '" + label + "' has no year " + std::to_string(year));
}

double TimeSeries::interpolate(double year) const {
    if (points.empty())
        throw DataError("series '" + label + "' is empty");
    if (year <= points.front().year) return points.front().value;
    if (year >= points.back().year) return points.back().value;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (year <= points[i].year) {
            const double span = points[i].year - points[i - 1].year;
            const double t = (year - points[i - 1].year) / span;
            return points[i - 1].value + t * (points[i].value - points[i - 1].value);
        }
    }
    return points.back().value;
}

void TimeSeries::validate() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].value))
            throw DataError("series '" + label + "': non-finite value at year " +
                            std::to_string(points[i].year));
        if (i > 0 && points[i].year == points[i - 1].year)
            throw DataError("series '" + label + "': duplicate year " +
                            std::to_string(points[i].year));
        if (i > 0 && points[i].year < points[i - 1].year)
            throw DataError("series '" + label + "': years not increasing at " +
                            std::to_string(points[i].year));
    }
}

TimeSeries load_series(const std::filesystem::path& path, SeriesSchema schema) {
    const auto lines = read_lines(path);
    expect_header(lines, "year,value", path);

    TimeSeries series;
    series.label = path.stem().string();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, text] = lines[i];
        const auto fields = split_fields(text);
        if (fields.size() != 2)
            throw DataError(location(path, number) + ": expected 2 fields, got " +
                            std::to_string(fields.size()));
        series.points.push_back({parse_year(fields[0], path, number),
                                 parse_value(fields[1], path, number)});
    }
    series.validate();
    if (series.empty())
        throw DataError(path.string() + ": no data rows");

    if (schema == SeriesSchema::labor_share) {
        const bool all_above = std::all_of(series.points.begin(), series.points.end(),
                                           [](const TimePoint& p) { return p.value > 1.5; });
        if (all_above) {
            for (TimePoint& p : series.points) p.value /= 100.0;
            series.normalized_from_percent = true;
        }
        for (const TimePoint& p : series.points)
            if (!(p.value > 0.0 && p.value < 1.0))
                throw DataError(path.string() + ": labor share " + format_double(p.value) +
                                " at year " + std::to_string(p.year) + " outside (0,1)");
    } else {
        for (const TimePoint& p : series.points)
            if (!(p.value > 10.0 && p.value < 60.0))
                throw DataError(path.string() + ": median age " + format_double(p.value) +
                                " at year " + std::to_string(p.year) + " outside (10,60)");
    }
    return series;
}

std::vector<CognitionRecord> load_cognition(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    expect_header(lines, "country,score_50s,score_70s,year_basis", path);

    std::vector<CognitionRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, text] = lines[i];
        const auto fields = split_fields(text);
        if (fields.size() != 4)
            throw DataError(location(path, number) + ": expected 4 fields, got " +
                            std::to_string(fields.size()));
        CognitionRecord rec;
        rec.country = fields[0];
        rec.score_50s = parse_value(fields[1], path, number);
        rec.score_70s = parse_value(fields[2], path, number);
        rec.year_basis = fields[3];
        if (rec.country.empty())
            throw DataError(location(path, number) + ": empty country name");
        if (!(rec.score_50s > 0.0) || !(rec.score_70s > 0.0))
            throw DataError(location(path, number) + ": scores must be positive");
        rec.score_increase_flag = rec.score_70s > rec.score_50s;
        records.push_back(std::move(rec));
    }
    if (records.empty())
        throw DataError(path.string() + ": no data rows");
    return records;
}

void write_series(const TimeSeries& series, std::ostream& out) {
    out << "year,value\n";
    for (const TimePoint& p : series.points)
        out << p.year << ',' << format_double(p.value) << '\n';
}

void write_series(const TimeSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write " + path.string());
    write_series(series, out);
}

CountryDataset align(const TimeSeries& labor, const TimeSeries& age,
                     const std::string& country, const std::string& source) {
    if (labor.empty() || age.empty())
        throw DataError("align: empty input series");

    CountryDataset data;
    data.country = country;
    data.source = source;
    data.labor_share.label = labor.label;
    data.labor_share.normalized_from_percent = labor.normalized_from_percent;
    data.median_age.label = age.label;

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < labor.size() && j < age.size()) {
        const int yl = labor.points[i].year;
        const int ya = age.points[j].year;
        if (yl == ya) {
            data.labor_share.points.push_back(labor.points[i]);
            data.median_age.points.push_back(age.points[j]);
            ++i;
            ++j;
        } else if (yl < ya) {
            ++i;
        } else {
            ++j;
        }
    }
    data.dropped_labor_years = static_cast<int>(labor.size() - data.size());
    data.dropped_age_years = static_cast<int>(age.size() - data.size());
    if (data.size() < 3)
        throw DataError("align: only " + std::to_string(data.size()) +
                        " common years, need at least 3");
    return data;
}

CountryDataset synthesize(const ModelParams& params, const TimeSeries& age_path,
                          double noise_sd, std::uint64_t seed) {
    validate(params);
    if (age_path.empty())
        throw DataError("synthesize: empty age path");
    if (!(noise_sd >= 0.0))
        throw DomainError("synthesize: noise sd must be >= 0");

    CountryDataset data;
    data.country = "synthetic";
    data.source = "synthetic";
    data.median_age = age_path;
    data.labor_share.label = "synthetic";
    Rng rng = Rng::stream(seed, 0);
    for (const TimePoint& p : age_path.points) {
        const double value = equilibrium_labor_share(params, p.value) +
                             (noise_sd > 0.0 ? rng.gaussian(noise_sd) : 0.0);
        data.labor_share.points.push_back({p.year, value});
    }
    return data;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    expect_header(lines, "country,labor_csv,age_csv,source", path);

    const std::filesystem::path base = path.parent_path();
    std::vector<ManifestEntry> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, text] = lines[i];
        const auto fields = split_fields(text);
        if (fields.size() != 4)
            throw DataError(location(path, number) + ": expected 4 fields, got " +
                            std::to_string(fields.size()));
        ManifestEntry entry;
        entry.country = fields[0];
        entry.labor_csv = std::filesystem::path(fields[1]);
        entry.age_csv = std::filesystem::path(fields[2]);
        entry.source = fields[3];
        if (entry.country.empty())
            throw DataError(location(path, number) + ": empty country name");
        if (entry.labor_csv.is_relative()) entry.labor_csv = base / entry.labor_csv;
        if (entry.age_csv.is_relative()) entry.age_csv = base / entry.age_csv;
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace laborshare
