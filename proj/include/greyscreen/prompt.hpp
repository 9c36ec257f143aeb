#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace greyscreen {

/// Two rendering shapes: SelectReject lists inclusion and exclusion rules
/// as separate "select when all" / "reject when any" blocks with numeric
/// confidence thresholds; NumberedRules folds every rule into one
/// numbered sequence with an explicit output template and examples.
enum class PromptStyle { SelectReject, NumberedRules };

std::string to_string(PromptStyle s);
PromptStyle prompt_style_from_string(std::string_view s);

struct PromptTemplate {
  std::string version_id;
  PromptStyle style = PromptStyle::NumberedRules;
  std::string role_line;  // "a software tester", "an expert in ..."
  std::string subject;
  std::vector<std::string> inclusion_rules;  // stored without trailing punctuation
  std::vector<std::string> exclusion_rules;
  int yes_threshold = 92;
  int no_threshold = 85;
  std::string output_template;
  std::vector<std::string> example_outputs;

  /// Thresholds in [0,100] with no_threshold < yes_threshold.
  void validate() const;  // throws InvalidInputError
};

struct ScreeningQuestion {
  std::string text;
  std::string version_id;
};

/// Deterministic text substitution; byte-identical output for identical
/// templates. Throws RenderError naming the first missing field.
std::string render_prompt(const PromptTemplate& tmpl);

PromptTemplate load_prompt_template(const std::filesystem::path& file);
void save_prompt_template(const PromptTemplate& tmpl, const std::filesystem::path& file);

/// Plain-text question file; the version id is the file stem.
ScreeningQuestion load_question(const std::filesystem::path& file);

}  // namespace greyscreen
