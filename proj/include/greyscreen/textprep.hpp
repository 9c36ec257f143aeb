#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace greyscreen {

/// Whitespace-normalized document text plus its sentence partition.
/// Joining `sentences` with single spaces reproduces `raw_text`.
struct DocumentText {
  std::string source_id;
  std::string raw_text;
  std::vector<std::string> sentences;
};

struct ChunkSet {
  std::string source_id;
  std::vector<std::string> chunks;
  std::size_t max_len = 1000;         // Unicode scalar budget per chunk
  std::size_t overlap_sentences = 1;

  bool operator==(const ChunkSet&) const = default;
};

/// Splits normalized text at '.', '!' or '?' followed by whitespace or
/// end of text. A trailing fragment without terminal punctuation is still
/// emitted.
std::vector<std::string> split_sentences(std::string_view normalized);

/// Normalizes whitespace and splits into sentences.
DocumentText document_from_text(std::string source_id, std::string_view extracted);

/// Page-ordered plain-text extraction from a PDF file (empty pages are
/// skipped), normalized and sentence-split. Throws ExtractError for
/// unreadable or encrypted files.
DocumentText extract_text(const std::string& source_id, const std::filesystem::path& pdf_path);

/// Greedy sentence accumulation: a sentence joins the open chunk while
/// the joined length stays under max_len; otherwise the chunk closes and
/// the next one starts with the last `overlap_sentences` sentences of the
/// closed chunk. A sentence that cannot fit even in a freshly seeded
/// chunk starts a chunk alone, so only single-oversize-sentence chunks
/// may reach max_len.
ChunkSet chunk_sentences(const DocumentText& doc, std::size_t max_len,
                         std::size_t overlap_sentences);

/// vault/<source_id>.txt: one chunk per line, newline-terminated; any
/// internal newline is written as a space.
std::filesystem::path write_vault(const ChunkSet& chunks, const std::filesystem::path& vault_dir);

/// Rebuilds a ChunkSet from a vault file; the source id is the file stem.
ChunkSet read_vault(const std::filesystem::path& file, std::size_t max_len,
                    std::size_t overlap_sentences);

}  // namespace greyscreen
