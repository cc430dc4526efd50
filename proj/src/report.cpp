#include "laborshare/report.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

namespace laborshare {

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, ptr);
}

ReportWriter::ReportWriter(std::ostream& out, const std::string& command) : out_(out) {
    out_ << "# laborshare report\n";
    out_ << "command: " << command << '\n';
}

void ReportWriter::section(const std::string& name) {
    out_ << '\n' << '[' << name << ']' << '\n';
}

void ReportWriter::kv(const std::string& key, const std::string& value) {
    out_ << key << ": " << value << '\n';
}

void ReportWriter::kv(const std::string& key, double value) { kv(key, format_double(value)); }

void ReportWriter::kv(const std::string& key, long value) { kv(key, std::to_string(value)); }

void ReportWriter::kv(const std::string& key, int value) { kv(key, std::to_string(value)); }

void ReportWriter::csv_header(const std::string& columns) { out_ << columns << '\n'; }

void ReportWriter::csv_row(const std::string& row) { out_ << row << '\n'; }

void ReportWriter::finish() {
    if (!finished_) {
        out_ << "\n[end]\n";
        finished_ = true;
    }
}

void write_fit_plot(const TimeSeries& observed, const TimeSeries& fitted, std::ostream& out) {
    out << "year,observed,fitted\n";
    for (std::size_t i = 0; i < observed.size() && i < fitted.size(); ++i)
        out << observed.points[i].year << ',' << format_double(observed.points[i].value) << ','
            << format_double(fitted.points[i].value) << '\n';
}

void write_trajectory(const Trajectory& trajectory, std::ostream& out) {
    out << "time,a,labor_share\n";
    for (std::size_t i = 0; i < trajectory.times.size(); ++i)
        out << format_double(trajectory.times[i]) << ',' << format_double(trajectory.a_values[i])
            << ',' << format_double(trajectory.labor_share_values[i]) << '\n';
}

} // namespace laborshare
