#include "fluctem/table_writer.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "fluctem/constants.hpp"

namespace fluctem {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // normalize the sign of zero
    char buffer[64];
    const auto res = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return std::string(buffer, res.ptr);
}

namespace {

std::string csv_field(const Cell& cell) {
    if (const double* num = std::get_if<double>(&cell))
        return format_double(*num);
    const std::string& text = std::get<std::string>(cell);
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

void check_shape(const Table& table) {
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::invalid_argument(
                "table row width does not match its column labels");
}

} // namespace

void write_csv(std::ostream& out, const Table& table,
               const std::string& units) {
    check_shape(table);
    out << "# fluctem " << version << " units=" << units << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << csv_field(row[c]);
        out << "\n";
    }
}

void write_json(std::ostream& out, const Table& table,
                const std::string& units) {
    check_shape(table);
    nlohmann::json doc;
    doc["tool"] = "fluctem";
    doc["version"] = std::string(version);
    doc["units"] = units;
    doc["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& cell : row) {
            if (const double* num = std::get_if<double>(&cell))
                cells.push_back(*num);
            else
                cells.push_back(std::get<std::string>(cell));
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

} // namespace fluctem
