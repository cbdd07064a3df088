#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "rgdiff/cli.hpp"

namespace rgdiff::cli {

std::vector<double> Table::column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw std::out_of_range("no column named " + std::string(name));
    }
    const auto idx = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        out.push_back(r[idx]);
    }
    return out;
}

double summary_value(const Summary& s, std::string_view name) {
    for (const auto& [k, v] : s) {
        if (k == name) {
            return v;
        }
    }
    throw std::out_of_range("no summary entry named " + std::string(name));
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string json_number(double v) {
    return std::isfinite(v) ? format_number(v) : "null";
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_number(row[i]);
        }
        out << '\n';
    }
}

void write_summary_json(const Summary& summary, std::ostream& out) {
    out << '{';
    for (std::size_t i = 0; i < summary.size(); ++i) {
        out << (i ? ", " : "") << '"' << summary[i].first << "\": " << json_number(summary[i].second);
    }
    out << '}';
}

void write_json(const Table& table, const Summary* summary, std::ostream& out) {
    out << "{\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n    {" : "\n    {");
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << (i ? ", " : "") << '"' << table.columns[i] << "\": " << json_number(table.rows[r][i]);
        }
        out << '}';
    }
    out << (table.rows.empty() ? "]" : "\n  ]");
    if (summary != nullptr) {
        out << ",\n  \"summary\": ";
        write_summary_json(*summary, out);
    }
    out << "\n}\n";
}

}  // namespace rgdiff::cli
