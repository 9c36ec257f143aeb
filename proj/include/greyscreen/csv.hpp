#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace greyscreen::csv {

/// RFC-4180-style quoting: fields containing comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
std::string escape_field(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Streaming reader. Handles quoted fields with embedded separators and
/// newlines. Lines starting with '#' (outside quotes) are treated as
/// comments and skipped.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  std::optional<std::vector<std::string>> next();

 private:
  std::istream& in_;
};

/// All data rows of a file (comments skipped). Throws ConfigError when
/// the file cannot be opened.
std::vector<std::vector<std::string>> read_file(const std::filesystem::path& path);

}  // namespace greyscreen::csv
