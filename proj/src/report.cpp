#include "digitforge/report.hpp"

#include "digitforge/error.hpp"

#include <cstdio>

namespace digitforge {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += char(c);
            }
        }
    }
    out += '"';
    return out;
}

} // namespace

void Report::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        fail(errc::shape_mismatch, "row width differs from the header");
    rows.push_back(std::move(cells));
}

std::string to_csv(const Report& report) {
    std::string out;
    for (size_t c = 0; c < report.columns.size(); ++c) {
        if (c) out += ',';
        out += csv_field(report.columns[c].name);
    }
    out += '\n';
    for (const auto& row : report.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += csv_field(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Report& report) {
    std::string out = "{\n  \"meta\": {";
    for (size_t i = 0; i < report.meta.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        out += json_string(report.meta[i].first);
        out += ": ";
        out += json_string(report.meta[i].second);
    }
    out += report.meta.empty() ? "},\n" : "\n  },\n";
    out += "  \"rows\": [";
    for (size_t r = 0; r < report.rows.size(); ++r) {
        out += r ? ",\n    {" : "\n    {";
        for (size_t c = 0; c < report.columns.size(); ++c) {
            out += c ? ", " : "";
            out += json_string(report.columns[c].name);
            out += ": ";
            if (report.columns[c].kind == Report::Kind::number)
                out += report.rows[r][c];
            else
                out += json_string(report.rows[r][c]);
        }
        out += "}";
    }
    out += report.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

std::string format_ratio(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

} // namespace digitforge
