#include <doctest.h>

#include <cmath>

#include "greyscreen/embedding.hpp"
#include "greyscreen/error.hpp"
#include "mock_endpoints.hpp"

using namespace greyscreen;

TEST_SUITE_BEGIN("embedding");

namespace {

ChunkSet chunks_of(std::vector<std::string> texts) {
  ChunkSet c;
  c.source_id = "doc";
  c.chunks = std::move(texts);
  return c;
}

EmbeddingConfig config_for(const testing::LlmMock& mock) {
  EmbeddingConfig cfg;
  cfg.endpoint = mock.base_url();
  cfg.model = "mock-embed";
  cfg.timeout_s = 5.0;
  cfg.retries = 1;
  return cfg;
}

}  // namespace

TEST_CASE("one vector per chunk, shared dimension") {
  testing::LlmMock mock;
  mock.start();
  auto cfg = config_for(mock);
  auto index = embed_chunks(chunks_of({"alpha", "beta", "gamma"}), cfg);
  CHECK(index.size() == 3);
  CHECK(index.dimension() == 8);
  for (const auto& v : index.vectors) CHECK(v.size() == index.dimension());
}

TEST_CASE("identical chunk text embeds identically") {
  testing::LlmMock mock;
  mock.start();
  auto cfg = config_for(mock);
  auto index = embed_chunks(chunks_of({"same text", "same text"}), cfg);
  CHECK(index.vectors[0] == index.vectors[1]);
}

TEST_CASE("empty chunk set refuses to embed") {
  testing::LlmMock mock;
  mock.start();
  auto cfg = config_for(mock);
  CHECK_THROWS_WITH_AS(embed_chunks(chunks_of({}), cfg), "nothing to embed",
                       InvalidInputError);
}

TEST_CASE("unreachable endpoint raises TransportError") {
  EmbeddingConfig cfg;
  cfg.endpoint = "http://127.0.0.1:9";  // discard port, nothing listens
  cfg.model = "m";
  cfg.timeout_s = 0.5;
  cfg.retries = 1;
  CHECK_THROWS_AS(embed_text("x", cfg), TransportError);
}

TEST_CASE("cosine similarity") {
  std::vector<double> a{1, 0, 0}, b{0, 1, 0}, c{2, 0, 0}, zero{0, 0, 0};
  CHECK(cosine_similarity(a, b) == doctest::Approx(0.0));
  CHECK(cosine_similarity(a, c) == doctest::Approx(1.0));
  CHECK(cosine_similarity(a, zero) == 0.0);
}

TEST_CASE("rank_chunks: hand-computed ordering over three small vectors") {
  ChunkIndex index;
  index.source_id = "doc";
  index.vectors = {{0.0, 1.0}, {1.0, 0.0}, {0.7071067811865476, 0.7071067811865476}};
  std::vector<double> query{1.0, 0.0};
  auto ranked = rank_chunks(query, index, 3);
  REQUIRE(ranked.size() == 3);
  CHECK(ranked[0].ordinal == 1);  // exact match first
  CHECK(ranked[0].score == doctest::Approx(1.0));
  CHECK(ranked[1].ordinal == 2);
  CHECK(ranked[1].score == doctest::Approx(std::sqrt(0.5)));
  CHECK(ranked[2].ordinal == 0);
  CHECK(ranked[2].score == doctest::Approx(0.0));
  // scores non-increasing
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    CHECK(ranked[i - 1].score >= ranked[i].score);
  }
}

TEST_CASE("identical vectors tie toward the lower ordinal") {
  ChunkIndex index;
  index.vectors = {{1.0, 1.0}, {1.0, 1.0}};
  auto ranked = rank_chunks(std::vector<double>{1.0, 1.0}, index, 2);
  CHECK(ranked[0].ordinal == 0);
  CHECK(ranked[1].ordinal == 1);
}

TEST_CASE("k larger than the index returns everything, k clamps otherwise") {
  ChunkIndex index;
  index.vectors = {{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}};
  CHECK(rank_chunks(std::vector<double>{1.0, 0.0}, index, 10).size() == 3);
  CHECK(rank_chunks(std::vector<double>{1.0, 0.0}, index, 2).size() == 2);
  CHECK_THROWS_AS(rank_chunks(std::vector<double>{1.0, 0.0}, index, 0), InvalidInputError);
}

TEST_CASE("retrieve_context returns chunk texts, similarity ordered") {
  testing::LlmMock mock;
  mock.start();
  auto cfg = config_for(mock);
  auto chunks = chunks_of({"first chunk", "second chunk", "third chunk"});
  auto index = embed_chunks(chunks, cfg);
  ScreeningQuestion q{"second chunk", "uq-test"};  // exact text of chunk 1
  auto context = retrieve_context(q, index, chunks, 2, cfg);
  REQUIRE(context.size() == 2);
  CHECK(context[0] == "second chunk");
}

TEST_SUITE_END();
