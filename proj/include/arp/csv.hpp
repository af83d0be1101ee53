#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace arp::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // data rows, header excluded
};

// RFC-4180-style CSV: comma separated, optional double-quoted fields with ""
// escapes, first line is the header. Accepts \n and \r\n line endings and a
// missing final newline. Throws arp::Error(Data) on malformed quoting.
Table parse(std::string_view text);

// Index of `name` in the header, or throws arp::Error(Data) naming the column.
std::size_t column(const Table& table, const std::string& name);

// Strict double / int parsing for CSV cells; `context` names the cell in errors
// (e.g. "features.csv row 3, column effort_opt").
double parse_double(const std::string& cell, const std::string& context);
int parse_int(const std::string& cell, const std::string& context);

// Shortest round-trip formatting; integral values keep a ".0" suffix so the
// column stays visibly numeric ("1" -> "1.0").
std::string format_double(double value);

// Quote a field if it contains commas, quotes or newlines.
std::string quote(const std::string& field);

}  // namespace arp::csv
