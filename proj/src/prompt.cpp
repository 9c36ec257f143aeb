#include "greyscreen/prompt.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "greyscreen/error.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

std::string to_string(PromptStyle s) {
  return s == PromptStyle::SelectReject ? "select_reject" : "numbered_rules";
}

PromptStyle prompt_style_from_string(std::string_view s) {
  std::string t = to_lower(trim(s));
  if (t == "select_reject") return PromptStyle::SelectReject;
  if (t == "numbered_rules") return PromptStyle::NumberedRules;
  throw InvalidInputError("unrecognized prompt style: '" + std::string(s) + "'");
}

void PromptTemplate::validate() const {
  if (yes_threshold < 0 || yes_threshold > 100 || no_threshold < 0 || no_threshold > 100) {
    throw InvalidInputError("prompt thresholds must lie in [0,100]");
  }
  if (no_threshold >= yes_threshold) {
    throw InvalidInputError("no_threshold must be below yes_threshold");
  }
}

namespace {

std::string render_select_reject(const PromptTemplate& t) {
  std::string out;
  out += "You are " + t.role_line + " specialized in selecting documents talking about " +
         t.subject + ". You always select a document when all of these " +
         number_word(t.inclusion_rules.size()) + " rules are satisfied:\n";
  for (std::size_t i = 0; i < t.inclusion_rules.size(); ++i) {
    out += std::to_string(i + 1) + " - " + t.inclusion_rules[i];
    out += (i + 1 == t.inclusion_rules.size()) ? ".\n" : ";\n";
  }
  out += "\nYou always reject a document when any of these " +
         number_word(t.exclusion_rules.size()) + " rules are satisfied:\n";
  for (std::size_t i = 0; i < t.exclusion_rules.size(); ++i) {
    out += std::to_string(i + 1) + " - " + t.exclusion_rules[i];
    out += (i + 1 == t.exclusion_rules.size()) ? ".\n" : ";\n";
  }
  out += "\nIf your suggested confidence level is > " + std::to_string(t.yes_threshold) +
         ", the <response> is *YES*.\n";
  out += "If your suggesting confidence is < " + std::to_string(t.no_threshold) +
         ", the <response> is *NO*.\n";
  out += "If your suggested confidence level is > " + std::to_string(t.no_threshold) +
         " and < " + std::to_string(t.yes_threshold) + ", the <response> is *DOUBT*.\n";
  out += "You always start your answer by informing the <response>, your confidence level in "
         "the range of 0-100, and a brief explanation about your decision.";
  return out;
}

std::string render_numbered_rules(const PromptTemplate& t) {
  std::size_t n = t.inclusion_rules.size() + t.exclusion_rules.size();
  std::string count = std::to_string(n);
  std::string out;
  out += "**Context**: You are " + t.role_line + ". You must choose " + t.subject +
         ". You consistently and professionally follow instructions and criteria to support "
         "your choice and provide an answer.\n";
  out += "\n**Instructions**:\n";
  out += "1. Clear all of your previous document evaluations.\n";
  out += "2. Evaluate the documents base on the following " + count + " rules:\n";
  std::size_t rule = 0;
  for (const auto& r : t.inclusion_rules) {
    out += "  - Rule " + std::to_string(++rule) + ": " + r + ".\n";
  }
  for (const auto& r : t.exclusion_rules) {
    out += "  - Rule " + std::to_string(++rule) + ": " + r + ".\n";
  }
  out += "3. Provide your answer Observing a **Response Criteria** and using an "
         "**Output Template**.\n";
  out += "\n**Response Criteria**:\n";
  out += "Set the `<choice>` to \"*YES*\" if the software testing document satisfies all " +
         count + " rules.\n";
  out += "Set the `<choice>` to \"*NO*\" if the software testing document does not satisfy "
         "any of the " + count + " rules.\n";
  out += "Set the `<choice>` to \"*DOUBT*\" if you cannot decide based on the rules\n";
  out += "Justify your decision by filling in an `<explanation>` with two short phrases "
         "extracted from the software testing document.\n";
  out += "Set the `<confidence level>` with a 0 - 100% value to indicate your decision "
         "confidence.\n";
  out += "\n**Output Template**:\n";
  out += t.output_template + "\n";
  out += "\n**Examples of Output**:\n";
  for (const auto& example : t.example_outputs) {
    out += "- " + example + "\n";
  }
  while (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

}  // namespace

std::string render_prompt(const PromptTemplate& tmpl) {
  tmpl.validate();
  if (trim(tmpl.role_line).empty()) throw RenderError("Role");
  if (trim(tmpl.subject).empty()) throw RenderError("Subject");
  if (tmpl.inclusion_rules.empty()) throw RenderError("InclusionRules");
  if (tmpl.style == PromptStyle::SelectReject) {
    if (tmpl.exclusion_rules.empty()) throw RenderError("ExclusionRules");
    return render_select_reject(tmpl);
  }
  if (trim(tmpl.output_template).empty()) throw RenderError("OutputTemplate");
  return render_numbered_rules(tmpl);
}

PromptTemplate load_prompt_template(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open prompt template: " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("prompt template " + file.string() + ": " + e.what());
  }
  PromptTemplate t;
  try {
    t.version_id = j.at("version").get<std::string>();
    t.style = prompt_style_from_string(j.at("style").get<std::string>());
    t.role_line = j.at("role").get<std::string>();
    t.subject = j.at("subject").get<std::string>();
    t.inclusion_rules = j.at("inclusion_rules").get<std::vector<std::string>>();
    t.exclusion_rules = j.at("exclusion_rules").get<std::vector<std::string>>();
    t.yes_threshold = j.value("yes_threshold", 92);
    t.no_threshold = j.value("no_threshold", 85);
    t.output_template = j.value("output_template", std::string());
    t.example_outputs = j.value("example_outputs", std::vector<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("prompt template " + file.string() + ": " + e.what());
  }
  t.validate();
  return t;
}

void save_prompt_template(const PromptTemplate& t, const std::filesystem::path& file) {
  nlohmann::json j;
  j["version"] = t.version_id;
  j["style"] = to_string(t.style);
  j["role"] = t.role_line;
  j["subject"] = t.subject;
  j["inclusion_rules"] = t.inclusion_rules;
  j["exclusion_rules"] = t.exclusion_rules;
  j["yes_threshold"] = t.yes_threshold;
  j["no_threshold"] = t.no_threshold;
  j["output_template"] = t.output_template;
  j["example_outputs"] = t.example_outputs;
  std::ofstream out(file);
  if (!out) throw ConfigError("cannot write prompt template: " + file.string());
  out << j.dump(2) << '\n';
}

ScreeningQuestion load_question(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot open question file: " + file.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ScreeningQuestion q;
  q.text = trim(content);
  q.version_id = file.stem().string();
  if (q.text.empty()) throw ConfigError("question file is empty: " + file.string());
  return q;
}

}  // namespace greyscreen
