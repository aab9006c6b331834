#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace fluctem {

using Cell = std::variant<double, std::string>;

/// Column-labelled result rows; every row must have columns.size() cells.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest exact decimal form of v (round-trips through binary64);
/// deterministic across runs and platforms.
std::string format_double(double v);

/// CSV with a leading comment line recording tool version and unit system:
///   # fluctem <version> units=<units>
///   col1,col2,...
void write_csv(std::ostream& out, const Table& table, const std::string& units);

/// JSON object {tool, version, units, columns, rows} with numeric cells
/// emitted as numbers.
void write_json(std::ostream& out, const Table& table, const std::string& units);

} // namespace fluctem
