#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace greyscreen {

enum class Choice { Yes, No, Doubt, NotAvailable, ParseFailed };
enum class Disposition { Keep, Discard, Unavailable };

std::string to_string(Choice c);   // "YES", "NO", "DOUBT", "NOT AVAILABLE", "PARSE FAILED"
std::string to_string(Disposition d);
Choice choice_from_string(std::string_view s);  // throws InvalidInputError

struct Verdict {
  std::string source_id;
  Choice choice = Choice::ParseFailed;
  std::optional<int> confidence;  // present whenever choice is Yes/No/Doubt
  std::string explanation;
  std::string raw_response;
  std::string model_id;
  double temperature = 0.0;
  std::string prompt_version;
};

/// Total parser over model output. Finds the first YES/NO/DOUBT token
/// (case-insensitive, surrounding asterisks optional, word-bounded), the
/// first "Confidence = <int>" or "<int>%" value, and takes the text after
/// the delimiter following them as the explanation. Anything that fails
/// to produce both a choice and a confidence parses as ParseFailed.
Verdict parse_response(std::string_view raw);

/// Yes/Doubt keep the document for humans, No discards it, NotAvailable
/// stays unavailable. ParseFailed keeps: an unreadable answer must never
/// silently drop a source.
Disposition decide_disposition(const Verdict& v);

}  // namespace greyscreen
