#pragma once

#include <iosfwd>
#include <string>

#include "laborshare/dynamics.hpp"
#include "laborshare/series.hpp"

namespace laborshare {

// Shortest representation that round-trips a double (up to 17 significant
// digits), locale-independent. All report and CSV output goes through this
// so that reruns with identical inputs are byte-identical.
std::string format_double(double value);

// Line-delimited structured report: `key: value` pairs grouped in [section]
// blocks, with embedded CSV where a section holds tabular data. Diffable and
// stable; ends with [end].
class ReportWriter {
public:
    explicit ReportWriter(std::ostream& out, const std::string& command);

    void section(const std::string& name);
    void kv(const std::string& key, const std::string& value);
    void kv(const std::string& key, double value);
    void kv(const std::string& key, long value);
    void kv(const std::string& key, int value);
    void csv_header(const std::string& columns);
    void csv_row(const std::string& row);
    void finish();

private:
    std::ostream& out_;
    bool finished_ = false;
};

// Plot CSV `year,observed,fitted`.
void write_fit_plot(const TimeSeries& observed, const TimeSeries& fitted, std::ostream& out);

// Plot CSV `time,a,labor_share`.
void write_trajectory(const Trajectory& trajectory, std::ostream& out);

} // namespace laborshare
