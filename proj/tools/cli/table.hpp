#pragma once

// Tabular command output, rendered as CSV or JSON.
//
// CSV: header row, data rows, then one "# key=value,..." line per summary
// group. Numbers use 17 significant digits so binary64 values round-trip.
// JSON: {"command", "columns", "rows", "summary"} with the same numbers.

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace riemannwave::cli {

/// An empty cell renders as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table
{
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::vector<std::pair<std::string, nlohmann::json>>> summary;
};

enum class Format { csv, json };

inline std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v, std::chars_format::general, 17);
    return std::string(buffer, result.ptr);
}

namespace detail {

inline std::string summary_value(const nlohmann::json &value)
{
    if (value.is_number_float()) {
        return format_number(value.get<double>());
    }
    if (value.is_array()) {
        std::string joined;
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (i > 0) {
                joined += ';';
            }
            joined += summary_value(value[i]);
        }
        return joined;
    }
    if (value.is_string()) {
        return value.get<std::string>();
    }
    return value.dump();
}

inline nlohmann::json cell_json(const Cell &cell)
{
    if (const auto *v = std::get_if<double>(&cell)) {
        return std::isfinite(*v) ? nlohmann::json(*v) : nlohmann::json(nullptr);
    }
    if (const auto *s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    return nullptr;
}

} // namespace detail

inline void write_csv(std::ostream &out, const Table &table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out << ',';
            }
            if (const auto *v = std::get_if<double>(&row[i])) {
                out << format_number(*v);
            } else if (const auto *s = std::get_if<std::string>(&row[i])) {
                out << *s;
            }
        }
        out << '\n';
    }
    for (const auto &group : table.summary) {
        out << "# ";
        for (std::size_t i = 0; i < group.size(); ++i) {
            out << (i ? "," : "") << group[i].first << '=' << detail::summary_value(group[i].second);
        }
        out << '\n';
    }
}

inline void write_json(std::ostream &out, const Table &table)
{
    nlohmann::ordered_json doc;
    doc["command"] = table.command;
    doc["columns"] = table.columns;
    auto rows = nlohmann::json::array();
    for (const auto &row : table.rows) {
        auto cells = nlohmann::json::array();
        for (const auto &cell : row) {
            cells.push_back(detail::cell_json(cell));
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto &group : table.summary) {
        for (const auto &[key, value] : group) {
            summary[key] = value;
        }
    }
    doc["summary"] = std::move(summary);
    out << doc.dump(2) << '\n';
}

inline void write_table(std::ostream &out, const Table &table, Format format)
{
    if (format == Format::json) {
        write_json(out, table);
    } else {
        write_csv(out, table);
    }
}

} // namespace riemannwave::cli
