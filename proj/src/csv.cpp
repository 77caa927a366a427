#include "trendaudit/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string_view>
#include <vector>

#include "trendaudit/errors.hpp"

namespace trendaudit {

namespace {

std::vector<std::string_view> split_csv(std::string_view row) {
    std::vector<std::string_view> fields;
    while (true) {
        const std::size_t comma = row.find(',');
        fields.push_back(row.substr(0, comma));
        if (comma == std::string_view::npos) break;
        row.remove_prefix(comma + 1);
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool parse_time(std::string_view field, std::int64_t& out) {
    field = trim(field);
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !field.empty();
}

// Returns false for missing / unparseable values; out may be non-finite.
bool parse_value(std::string_view field, double& out) {
    field = trim(field);
    if (field.empty()) return false;
    std::string buffer(field);
    char* end = nullptr;
    out = std::strtod(buffer.c_str(), &end);
    return end == buffer.c_str() + buffer.size();
}

}  // namespace

CsvSeries read_series_csv(std::istream& in, const std::string& time_column,
                          const std::string& value_column, const std::string& label) {
    std::string line;
    if (!std::getline(in, line)) {
        throw_error(ErrorCode::NoRows, "CSV '" + label + "': empty input");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // Strip a UTF-8 BOM if present.
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

    const auto header = split_csv(line);
    std::size_t time_idx = header.size();
    std::size_t value_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto name = trim(header[i]);
        if (name == time_column) time_idx = i;
        if (name == value_column) value_idx = i;
    }
    if (time_idx == header.size()) {
        throw_error(ErrorCode::MissingColumn,
                    "CSV '" + label + "': no column named '" + time_column + "'");
    }
    if (value_idx == header.size()) {
        throw_error(ErrorCode::MissingColumn,
                    "CSV '" + label + "': no column named '" + value_column + "'");
    }

    std::vector<std::pair<std::int64_t, double>> rows;
    CsvSeries out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() <= std::max(time_idx, value_idx)) {
            throw_error(ErrorCode::MalformedLine,
                        "CSV '" + label + "' line " + std::to_string(line_no) +
                            ": too few fields");
        }
        std::int64_t t = 0;
        if (!parse_time(fields[time_idx], t)) {
            throw_error(ErrorCode::MalformedLine,
                        "CSV '" + label + "' line " + std::to_string(line_no) +
                            ": time field does not parse as an integer");
        }
        double v = 0.0;
        if (!parse_value(fields[value_idx], v) || !std::isfinite(v)) {
            ++out.dropped_rows;
            continue;
        }
        rows.emplace_back(t, v);
    }
    if (rows.empty()) {
        throw_error(ErrorCode::NoRows, "CSV '" + label + "': no usable data rows");
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].first == rows[i - 1].first) {
            throw_error(ErrorCode::DuplicateTime,
                        "CSV '" + label + "': duplicate time stamp " +
                            std::to_string(rows[i].first));
        }
    }

    out.series.label = label;
    out.series.times.reserve(rows.size());
    out.series.values.reserve(rows.size());
    for (const auto& [t, v] : rows) {
        out.series.times.push_back(t);
        out.series.values.push_back(v);
    }
    out.series.validate();
    return out;
}

CsvSeries read_series_csv_file(const std::string& path, const std::string& time_column,
                               const std::string& value_column) {
    std::ifstream in(path);
    if (!in) {
        throw_error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    const std::string label = std::filesystem::path(path).stem().string();
    return read_series_csv(in, time_column, value_column, label);
}

}  // namespace trendaudit
