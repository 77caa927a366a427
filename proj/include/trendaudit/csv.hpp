#pragma once

#include <istream>
#include <string>

#include "trendaudit/series.hpp"

namespace trendaudit {

struct CsvSeries {
    TimeSeries series;
    // Rows discarded for missing or non-finite values.
    std::size_t dropped_rows = 0;
};

// Comma-separated, header row required, LF or CRLF. Rows may appear in
// any order; duplicate time stamps are an error.
CsvSeries read_series_csv(std::istream& in, const std::string& time_column,
                          const std::string& value_column, const std::string& label = {});

CsvSeries read_series_csv_file(const std::string& path, const std::string& time_column = "time",
                               const std::string& value_column = "value");

}  // namespace trendaudit
