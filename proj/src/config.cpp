#include "greyscreen/config.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "greyscreen/error.hpp"
#include "greyscreen/fetch.hpp"
#include "greyscreen/hash.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_absolute() || p.empty()) return path;
  return base / path;
}

}  // namespace

PipelineConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file: " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + file.string() + ": " + e.what());
  }

  PipelineConfig cfg;
  const std::filesystem::path base = file.has_parent_path()
                                         ? file.parent_path()
                                         : std::filesystem::path(".");
  try {
    cfg.search.endpoint = j.value("search_endpoint", std::string());
    cfg.search.api_key = j.value("search_api_key", std::string());
    cfg.search.engine_id = j.value("search_engine_id", std::string());
    cfg.search.page_delay_ms = j.value("page_delay_ms", 1000);
    cfg.search.timeout_s = j.value("search_timeout_s", 30.0);

    cfg.terms.population = j.value("population_terms", std::vector<std::string>());
    cfg.terms.intervention = j.value("intervention_terms", std::vector<std::string>());
    if (j.contains("query_strategy")) {
      cfg.strategy = strategy_from_string(j["query_strategy"].get<std::string>());
    }

    cfg.fetch_timeout_s = j.value("fetch_timeout_s", 12.0);
    cfg.fetch_parallelism = j.value("fetch_parallelism", 4);

    cfg.chunk_max_len = j.value("chunk_max_len", std::size_t{1000});
    cfg.chunk_overlap = j.value("chunk_overlap_sentences", std::size_t{1});
    cfg.retrieval_k = j.value("retrieval_k", 20);

    cfg.prompt_template_path = resolve(base, j.value("prompt_template", std::string()));
    cfg.question_path = resolve(base, j.value("question", std::string()));

    cfg.embedding.endpoint = j.value("embedding_endpoint", std::string());
    cfg.embedding.path = j.value("embedding_path", std::string("/api/embeddings"));
    cfg.embedding.model = j.value("embedding_model", std::string());
    cfg.embedding.timeout_s = j.value("embedding_timeout_s", 120.0);
    cfg.embedding.retries = j.value("inference_retries", 2);

    cfg.inference.endpoint = j.value("inference_endpoint", std::string());
    cfg.inference.path = j.value("inference_path", std::string("/api/generate"));
    cfg.inference.model = j.value("inference_model", std::string());
    cfg.inference.temperature = j.value("temperature", 0.1);
    cfg.inference.timeout_s = j.value("inference_timeout_s", 600.0);
    cfg.inference.retries = j.value("inference_retries", 2);

    cfg.output_dir = resolve(base, j.value("output_dir", std::string("run")));
    cfg.seed = j.value("seed", std::uint64_t{1});

    cfg.block_page_markers = j.value("block_page_markers", default_block_markers());

    cfg.sample_confidence = j.value("sample_confidence", 0.95);
    cfg.sample_margin = j.value("sample_margin", 0.05);
    cfg.sample_proportion = j.value("sample_proportion", 0.5);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + file.string() + ": " + e.what());
  }

  if (const char* key = std::getenv("GREYSCREEN_API_KEY"); key && *key) {
    cfg.search.api_key = key;
  }
  validate_config(cfg);
  return cfg;
}

void validate_config(const PipelineConfig& cfg) {
  if (cfg.fetch_timeout_s <= 0) throw ConfigError("fetch_timeout_s must be positive");
  if (cfg.fetch_parallelism < 1) throw ConfigError("fetch_parallelism must be >= 1");
  if (cfg.chunk_max_len < 1) throw ConfigError("chunk_max_len must be >= 1");
  if (cfg.retrieval_k < 1) throw ConfigError("retrieval_k must be >= 1");
  if (cfg.search.page_delay_ms < 0) throw ConfigError("page_delay_ms must be >= 0");
  if (cfg.inference.temperature < 0.0 || cfg.inference.temperature > 2.0) {
    throw ConfigError("temperature must lie in [0,2]");
  }
  if (!(cfg.sample_confidence > 0.0 && cfg.sample_confidence < 1.0)) {
    throw ConfigError("sample_confidence must lie in (0,1)");
  }
  if (!(cfg.sample_margin > 0.0 && cfg.sample_margin < 1.0)) {
    throw ConfigError("sample_margin must lie in (0,1)");
  }
  if (!(cfg.sample_proportion > 0.0 && cfg.sample_proportion < 1.0)) {
    throw ConfigError("sample_proportion must lie in (0,1)");
  }
  for (const auto& path : {cfg.prompt_template_path, cfg.question_path}) {
    if (!path.empty() && !std::filesystem::exists(path)) {
      throw ConfigError("referenced path does not exist: " + path.string());
    }
  }
}

void validate_for_search(const PipelineConfig& cfg) {
  if (cfg.search.endpoint.empty()) throw ConfigError("search_endpoint is required");
  if (cfg.search.api_key.empty()) {
    throw ConfigError("search_api_key is required (or set GREYSCREEN_API_KEY)");
  }
  if (cfg.search.engine_id.empty()) throw ConfigError("search_engine_id is required");
  cfg.terms.validate();
}

void validate_for_screen(const PipelineConfig& cfg) {
  if (cfg.prompt_template_path.empty()) throw ConfigError("prompt_template is required");
  if (cfg.question_path.empty()) throw ConfigError("question is required");
  if (cfg.embedding.endpoint.empty()) throw ConfigError("embedding_endpoint is required");
  if (cfg.embedding.model.empty()) throw ConfigError("embedding_model is required");
  if (cfg.inference.endpoint.empty()) throw ConfigError("inference_endpoint is required");
  if (cfg.inference.model.empty()) throw ConfigError("inference_model is required");
}

std::string config_hash(const PipelineConfig& cfg) {
  nlohmann::json j;
  j["search_endpoint"] = cfg.search.endpoint;
  j["search_engine_id"] = cfg.search.engine_id;
  j["page_delay_ms"] = cfg.search.page_delay_ms;
  j["population_terms"] = cfg.terms.population;
  j["intervention_terms"] = cfg.terms.intervention;
  j["query_strategy"] = to_string(cfg.strategy);
  j["fetch_timeout_s"] = cfg.fetch_timeout_s;
  j["fetch_parallelism"] = cfg.fetch_parallelism;
  j["chunk_max_len"] = cfg.chunk_max_len;
  j["chunk_overlap_sentences"] = cfg.chunk_overlap;
  j["retrieval_k"] = cfg.retrieval_k;
  j["prompt_template"] = cfg.prompt_template_path.string();
  j["question"] = cfg.question_path.string();
  j["embedding_endpoint"] = cfg.embedding.endpoint;
  j["embedding_path"] = cfg.embedding.path;
  j["embedding_model"] = cfg.embedding.model;
  j["inference_endpoint"] = cfg.inference.endpoint;
  j["inference_path"] = cfg.inference.path;
  j["inference_model"] = cfg.inference.model;
  j["temperature"] = cfg.inference.temperature;
  j["inference_retries"] = cfg.inference.retries;
  j["seed"] = cfg.seed;
  j["block_page_markers"] = cfg.block_page_markers;
  j["sample_confidence"] = cfg.sample_confidence;
  j["sample_margin"] = cfg.sample_margin;
  j["sample_proportion"] = cfg.sample_proportion;
  return sha256_hex(j.dump());
}

}  // namespace greyscreen
