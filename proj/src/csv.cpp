#include "arp/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "arp/errors.hpp"

namespace arp::csv {

namespace {

// Splits one record; `pos` points at the start of a line and is advanced past
// the terminating newline. Quoted fields may contain commas and newlines.
std::vector<std::string> split_record(std::string_view text, std::size_t& pos, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;

  while (pos < text.size()) {
    char c = text[pos];
    if (in_quotes) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field.push_back('"');
          pos += 2;
        } else {
          in_quotes = false;
          ++pos;
        }
      } else {
        field.push_back(c);
        ++pos;
      }
      continue;
    }
    if (c == '"') {
      if (!field.empty() || field_was_quoted) {
        throw data_error("csv line " + std::to_string(line_no) + ": stray quote inside unquoted field");
      }
      in_quotes = true;
      field_was_quoted = true;
      ++pos;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
      ++pos;
    } else if (c == '\n' || c == '\r') {
      ++pos;
      if (c == '\r' && pos < text.size() && text[pos] == '\n') ++pos;
      fields.push_back(std::move(field));
      return fields;
    } else {
      field.push_back(c);
      ++pos;
    }
  }
  if (in_quotes) {
    throw data_error("csv line " + std::to_string(line_no) + ": unterminated quoted field");
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

Table parse(std::string_view text) {
  Table table;
  std::size_t pos = 0;
  std::size_t line_no = 1;
  bool have_header = false;
  while (pos < text.size()) {
    // Skip blank lines.
    if (text[pos] == '\n' || text[pos] == '\r') {
      char c = text[pos++];
      if (c == '\r' && pos < text.size() && text[pos] == '\n') ++pos;
      ++line_no;
      continue;
    }
    auto fields = split_record(text, pos, line_no);
    ++line_no;
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
    } else {
      if (fields.size() != table.header.size()) {
        throw data_error("csv line " + std::to_string(line_no - 1) + ": " +
                         std::to_string(fields.size()) + " fields, header has " +
                         std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(fields));
    }
  }
  if (!have_header) {
    throw data_error("csv: empty input, expected a header row");
  }
  return table;
}

std::size_t column(const Table& table, const std::string& name) {
  auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end()) {
    throw data_error("csv: missing column '" + name + "'");
  }
  return static_cast<std::size_t>(it - table.header.begin());
}

double parse_double(const std::string& cell, const std::string& context) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
    throw data_error(context + ": expected a number, got '" + cell + "'");
  }
  return value;
}

int parse_int(const std::string& cell, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
    throw data_error(context + ": expected an integer, got '" + cell + "'");
  }
  return value;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, ptr);
  if (out.find('.') == std::string::npos && out.find('e') == std::string::npos &&
      out.find("inf") == std::string::npos && out.find("nan") == std::string::npos) {
    out += ".0";
  }
  return out;
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

}  // namespace arp::csv
