#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "greyscreen/prompt.hpp"
#include "greyscreen/textprep.hpp"

namespace greyscreen {

struct EmbeddingConfig {
  std::string endpoint;              // http(s)://host[:port]
  std::string path = "/api/embeddings";
  std::string model;
  double timeout_s = 120.0;
  int retries = 2;

  std::string url() const { return endpoint + path; }
};

/// One embedding vector per chunk, in chunk order.
struct ChunkIndex {
  std::string source_id;
  std::vector<std::vector<double>> vectors;

  std::size_t size() const { return vectors.size(); }
  std::size_t dimension() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

/// POST {model, prompt} -> {embedding: [...]}. Throws TransportError on
/// network failure (after bounded retries) and ProtocolError on malformed
/// payloads.
std::vector<double> embed_text(const std::string& text, const EmbeddingConfig& cfg);

/// Embeds every chunk, order-preserving; all vectors must share one
/// dimension. An empty chunk set is an InvalidInputError ("nothing to
/// embed").
ChunkIndex embed_chunks(const ChunkSet& chunks, const EmbeddingConfig& cfg);

/// Zero-norm vectors compare as similarity 0.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

struct RankedChunk {
  std::size_t ordinal = 0;
  double score = 0.0;
};

/// Top-min(k, index size) chunks by cosine similarity, descending; equal
/// scores break toward the lower ordinal.
std::vector<RankedChunk> rank_chunks(std::span<const double> query_vec, const ChunkIndex& index,
                                     std::size_t k);

/// Embeds the question text and returns the top-k chunk texts, best first.
std::vector<std::string> retrieve_context(const ScreeningQuestion& question,
                                          const ChunkIndex& index, const ChunkSet& chunks,
                                          std::size_t k, const EmbeddingConfig& cfg);

}  // namespace greyscreen
