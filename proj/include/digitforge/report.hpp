#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace digitforge {

// Tabular report with preformatted cells. Column kinds only steer JSON:
// number columns are emitted as bare JSON numbers (cells must already be
// valid numeric literals, e.g. ratios formatted to 6 decimals), text
// columns as JSON strings (big integers ride as decimal strings so no
// reader rounds them). Serialization is hand-rolled and byte-stable:
// same report, same bytes.
struct Report {
    enum class Kind { text, number };

    struct Column {
        std::string name;
        Kind kind = Kind::text;
    };

    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;
    // meta: command name, parameters, artifact version; JSON only.
    std::vector<std::pair<std::string, std::string>> meta;

    void add_row(std::vector<std::string> cells);
};

// RFC 4180: header row, CRLF-free (LF line ends), cells quoted when they
// contain comma, quote or newline.
std::string to_csv(const Report& report);

// {"meta": {...}, "rows": [{col: cell, ...}, ...]} with keys in declared
// column order, 2-space indentation.
std::string to_json(const Report& report);

// Fixed 6 decimal places, the format every ratio in every report uses.
std::string format_ratio(double value);

} // namespace digitforge
