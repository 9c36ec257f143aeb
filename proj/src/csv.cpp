#include "greyscreen/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "greyscreen/error.hpp"

namespace greyscreen::csv {

std::string escape_field(std::string_view field) {
  // A leading '#' must be quoted or the reader would take the row for a
  // comment line.
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos ||
                      (!field.empty() && field.front() == '#');
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << escape_field(fields[i]);
  }
  out.put('\n');
}

std::optional<std::vector<std::string>> Reader::next() {
  int c = in_.get();
  // Skip blank and comment lines between records.
  while (c == '#' || c == '\n' || c == '\r') {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in_.get();
    }
    c = in_.get();
  }
  if (c == EOF) return std::nullopt;

  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  while (true) {
    if (c == EOF) {
      fields.push_back(std::move(field));
      return fields;
    }
    if (in_quotes) {
      if (c == '"') {
        int next = in_.get();
        if (next == '"') {
          field.push_back('"');
        } else {
          in_quotes = false;
          c = next;
          continue;
        }
      } else {
        field.push_back(static_cast<char>(c));
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      fields.push_back(std::move(field));
      return fields;
    } else {
      field.push_back(static_cast<char>(c));
    }
    c = in_.get();
  }
}

std::vector<std::vector<std::string>> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open CSV file: " + path.string());
  Reader reader(in);
  std::vector<std::vector<std::string>> rows;
  while (auto row = reader.next()) rows.push_back(std::move(*row));
  return rows;
}

}  // namespace greyscreen::csv
