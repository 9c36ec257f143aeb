#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace greyscreen {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);
bool ends_with_ci(std::string_view s, std::string_view suffix);

/// Collapses every whitespace run to a single space and strips both ends.
std::string normalize_whitespace(std::string_view text);

/// Number of Unicode scalar values in a UTF-8 string (continuation bytes
/// do not count). Character budgets are expressed in this unit.
std::size_t utf8_length(std::string_view s);

/// 5 -> "five". Supports 0..99; larger values fall back to digits.
std::string number_word(std::size_t n);

/// Lowercase identifier fragment: alnum kept, runs of anything else
/// become a single '-'.
std::string slugify(std::string_view s);

std::string iso8601_utc_now();

std::vector<std::string> split_lines(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string format_double(double v);  // shortest round-trippable-ish "%.12g"

}  // namespace greyscreen
