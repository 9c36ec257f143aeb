#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "greyscreen/embedding.hpp"
#include "greyscreen/inference.hpp"
#include "greyscreen/search.hpp"
#include "greyscreen/terms.hpp"

namespace greyscreen {

/// One flat JSON document wires the whole pipeline. Relative paths are
/// resolved against the config file's directory; GREYSCREEN_API_KEY
/// overrides the search API key.
struct PipelineConfig {
  SearchApiConfig search;
  TermSet terms;
  QueryStrategy strategy = QueryStrategy::OrMerged;

  double fetch_timeout_s = 12.0;
  int fetch_parallelism = 4;

  std::size_t chunk_max_len = 1000;
  std::size_t chunk_overlap = 1;
  int retrieval_k = 20;

  std::filesystem::path prompt_template_path;
  std::filesystem::path question_path;

  EmbeddingConfig embedding;
  InferenceConfig inference;

  std::filesystem::path output_dir = "run";
  std::uint64_t seed = 1;

  std::vector<std::string> block_page_markers;

  double sample_confidence = 0.95;
  double sample_margin = 0.05;
  double sample_proportion = 0.5;
};

PipelineConfig load_config(const std::filesystem::path& file);

/// Numeric-range and referenced-path checks shared by every stage.
void validate_config(const PipelineConfig& cfg);

/// Search credentials must be present before any output is created.
void validate_for_search(const PipelineConfig& cfg);

/// Prompt/question paths and endpoints needed by the screen stage.
void validate_for_screen(const PipelineConfig& cfg);

/// SHA-256 over the canonical JSON form. The API key is redacted first:
/// rotating a secret must not invalidate resumable state.
std::string config_hash(const PipelineConfig& cfg);

}  // namespace greyscreen
