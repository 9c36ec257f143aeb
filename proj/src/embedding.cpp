#include "greyscreen/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "greyscreen/error.hpp"
#include "greyscreen/http_client.hpp"

namespace greyscreen {

std::vector<double> embed_text(const std::string& text, const EmbeddingConfig& cfg) {
  nlohmann::json body;
  body["model"] = cfg.model;
  body["prompt"] = text;
  const std::string payload = body.dump();

  http::Response res;
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    res = http::post_json(cfg.url(), payload, cfg.timeout_s);
    if (res.transport_ok && res.status < 500) break;
  }
  if (!res.transport_ok) {
    throw TransportError("embedding endpoint: " + res.error);
  }
  if (res.status != 200) {
    throw TransportError("embedding endpoint returned HTTP " + std::to_string(res.status));
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(res.body);
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("embedding response is not JSON: ") + e.what());
  }
  if (!parsed.contains("embedding") || !parsed["embedding"].is_array()) {
    throw ProtocolError("embedding response lacks an 'embedding' array");
  }
  std::vector<double> vec;
  vec.reserve(parsed["embedding"].size());
  for (const auto& v : parsed["embedding"]) {
    if (!v.is_number()) throw ProtocolError("embedding vector holds a non-number");
    vec.push_back(v.get<double>());
  }
  if (vec.empty()) throw ProtocolError("embedding vector is empty");
  return vec;
}

ChunkIndex embed_chunks(const ChunkSet& chunks, const EmbeddingConfig& cfg) {
  if (chunks.chunks.empty()) throw InvalidInputError("nothing to embed");
  ChunkIndex index;
  index.source_id = chunks.source_id;
  index.vectors.reserve(chunks.chunks.size());
  for (const auto& chunk : chunks.chunks) {
    auto vec = embed_text(chunk, cfg);
    if (!index.vectors.empty() && vec.size() != index.dimension()) {
      throw ProtocolError("embedding dimension changed mid-document (" +
                          std::to_string(index.dimension()) + " -> " +
                          std::to_string(vec.size()) + ")");
    }
    index.vectors.push_back(std::move(vec));
  }
  return index;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<RankedChunk> rank_chunks(std::span<const double> query_vec, const ChunkIndex& index,
                                     std::size_t k) {
  if (k < 1) throw InvalidInputError("rank_chunks: k must be >= 1");
  std::vector<RankedChunk> ranked;
  ranked.reserve(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    ranked.push_back({i, cosine_similarity(query_vec, index.vectors[i])});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedChunk& a, const RankedChunk& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.ordinal < b.ordinal;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

std::vector<std::string> retrieve_context(const ScreeningQuestion& question,
                                          const ChunkIndex& index, const ChunkSet& chunks,
                                          std::size_t k, const EmbeddingConfig& cfg) {
  if (index.size() != chunks.chunks.size()) {
    throw InvalidInputError("retrieve_context: index and chunk set sizes differ");
  }
  auto query_vec = embed_text(question.text, cfg);
  auto ranked = rank_chunks(query_vec, index, k);
  std::vector<std::string> out;
  out.reserve(ranked.size());
  for (const auto& r : ranked) out.push_back(chunks.chunks[r.ordinal]);
  return out;
}

}  // namespace greyscreen
