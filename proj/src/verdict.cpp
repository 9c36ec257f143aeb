#include "greyscreen/verdict.hpp"

#include <cctype>

#include "greyscreen/error.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

std::string to_string(Choice c) {
  switch (c) {
    case Choice::Yes: return "YES";
    case Choice::No: return "NO";
    case Choice::Doubt: return "DOUBT";
    case Choice::NotAvailable: return "NOT AVAILABLE";
    case Choice::ParseFailed: return "PARSE FAILED";
  }
  return "?";
}

std::string to_string(Disposition d) {
  switch (d) {
    case Disposition::Keep: return "KEEP";
    case Disposition::Discard: return "DISCARD";
    case Disposition::Unavailable: return "UNAVAILABLE";
  }
  return "?";
}

Choice choice_from_string(std::string_view s) {
  std::string t = to_lower(trim(s));
  if (t == "yes") return Choice::Yes;
  if (t == "no") return Choice::No;
  if (t == "doubt") return Choice::Doubt;
  if (t == "not available" || t == "not_available" || t == "na" || t == "n/a") {
    return Choice::NotAvailable;
  }
  if (t == "parse failed" || t == "parse_failed") return Choice::ParseFailed;
  throw InvalidInputError("unrecognized choice: '" + std::string(s) + "'");
}

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Earliest word-bounded, case-insensitive occurrence of `token`.
std::size_t find_token(const std::string& lower, std::string_view token) {
  std::size_t pos = 0;
  while ((pos = lower.find(token, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(lower[pos - 1]);
    std::size_t after = pos + token.size();
    bool right_ok = after >= lower.size() || !is_word_char(lower[after]);
    if (left_ok && right_ok) return pos;
    pos = after;
  }
  return std::string::npos;
}

struct ConfidenceMatch {
  int value = -1;
  std::size_t end = std::string::npos;  // offset just past the match
};

// First "confidence = <int>" or bare "<int>%" with a value in [0,100].
ConfidenceMatch find_confidence(const std::string& lower) {
  std::size_t pos = 0;
  while ((pos = lower.find("confidence", pos)) != std::string::npos) {
    std::size_t i = pos + 10;
    while (i < lower.size() && (lower[i] == ' ' || lower[i] == '\t')) ++i;
    if (i < lower.size() && lower[i] == '=') {
      ++i;
      while (i < lower.size() && (lower[i] == ' ' || lower[i] == '\t')) ++i;
      std::size_t digits = i;
      int value = 0;
      while (i < lower.size() && std::isdigit(static_cast<unsigned char>(lower[i])) &&
             i - digits < 4) {
        value = value * 10 + (lower[i] - '0');
        ++i;
      }
      if (i > digits && value <= 100) {
        if (i < lower.size() && lower[i] == '%') ++i;
        return {value, i};
      }
    }
    pos += 10;
  }
  // Fallback: a bare percentage.
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(lower[i]))) continue;
    std::size_t start = i;
    int value = 0;
    while (i < lower.size() && std::isdigit(static_cast<unsigned char>(lower[i])) &&
           i - start < 4) {
      value = value * 10 + (lower[i] - '0');
      ++i;
    }
    if (i < lower.size() && lower[i] == '%' && value <= 100) {
      return {value, i + 1};
    }
  }
  return {};
}

}  // namespace

Verdict parse_response(std::string_view raw) {
  Verdict v;
  v.raw_response = std::string(raw);
  v.choice = Choice::ParseFailed;

  const std::string lower = to_lower(raw);

  struct Candidate {
    std::string_view token;
    Choice choice;
  };
  static constexpr Candidate candidates[] = {
      {"yes", Choice::Yes}, {"no", Choice::No}, {"doubt", Choice::Doubt}};

  std::size_t best_pos = std::string::npos;
  Choice best_choice = Choice::ParseFailed;
  std::size_t best_end = 0;
  for (const auto& c : candidates) {
    std::size_t pos = find_token(lower, c.token);
    if (pos < best_pos) {
      best_pos = pos;
      best_choice = c.choice;
      best_end = pos + c.token.size();
    }
  }
  if (best_pos == std::string::npos) return v;

  ConfidenceMatch conf = find_confidence(lower);
  if (conf.value < 0) return v;  // stated choice without a confidence is unusable

  v.choice = best_choice;
  v.confidence = conf.value;

  // Explanation: text after the delimiter that follows the parsed fields.
  std::size_t anchor = std::max(best_end, conf.end);
  std::size_t delim = raw.find(';', anchor);
  if (delim == std::string_view::npos) delim = raw.rfind(';');
  if (delim != std::string_view::npos && delim + 1 < raw.size()) {
    v.explanation = trim(raw.substr(delim + 1));
  } else if (delim == std::string_view::npos && anchor < raw.size()) {
    v.explanation = trim(raw.substr(anchor));
  }
  return v;
}

Disposition decide_disposition(const Verdict& v) {
  switch (v.choice) {
    case Choice::Yes:
    case Choice::Doubt:
    case Choice::ParseFailed:
      return Disposition::Keep;
    case Choice::No:
      return Disposition::Discard;
    case Choice::NotAvailable:
      return Disposition::Unavailable;
  }
  return Disposition::Keep;
}

}  // namespace greyscreen
