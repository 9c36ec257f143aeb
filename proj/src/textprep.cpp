#include "greyscreen/textprep.hpp"

#include <fstream>

#include "greyscreen/error.hpp"
#include "greyscreen/pdf_text.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

std::vector<std::string> split_sentences(std::string_view normalized) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    char c = normalized[i];
    if (c != '.' && c != '!' && c != '?') continue;
    bool at_end = i + 1 == normalized.size();
    if (at_end || normalized[i + 1] == ' ') {
      sentences.emplace_back(normalized.substr(start, i + 1 - start));
      start = i + 2;  // skip the single joining space
      if (start > normalized.size()) start = normalized.size();
      i = start - 1;
    }
  }
  if (start < normalized.size()) {
    sentences.emplace_back(normalized.substr(start));
  }
  return sentences;
}

DocumentText document_from_text(std::string source_id, std::string_view extracted) {
  DocumentText doc;
  doc.source_id = std::move(source_id);
  doc.raw_text = normalize_whitespace(extracted);
  doc.sentences = split_sentences(doc.raw_text);
  return doc;
}

DocumentText extract_text(const std::string& source_id, const std::filesystem::path& pdf_path) {
  std::vector<std::string> pages;
  try {
    pages = pdf::page_texts(pdf_path);
  } catch (const pdf::PdfError& e) {
    throw ExtractError(source_id, e.what());
  }
  std::string text;
  for (const auto& page : pages) {
    if (trim(page).empty()) continue;  // skip pages with no extractable text
    if (!text.empty()) text += ' ';
    text += page;
  }
  return document_from_text(source_id, text);
}

ChunkSet chunk_sentences(const DocumentText& doc, std::size_t max_len,
                         std::size_t overlap_sentences) {
  if (max_len < 1) throw InvalidInputError("chunk_sentences: max_len must be >= 1");

  ChunkSet out;
  out.source_id = doc.source_id;
  out.max_len = max_len;
  out.overlap_sentences = overlap_sentences;

  std::vector<std::string> current;  // sentences of the open chunk
  std::size_t current_len = 0;       // scalar length including joining spaces

  auto close_current = [&] {
    if (current.empty()) return;
    out.chunks.push_back(join(current, " "));
  };

  for (const auto& sentence : doc.sentences) {
    std::size_t sentence_len = utf8_length(sentence);
    std::size_t joined = current_len + (current.empty() ? 0 : 1) + sentence_len;
    if (joined < max_len || current.empty()) {
      // An oversize first sentence still occupies its own chunk whole.
      current.push_back(sentence);
      current_len = joined;
      if (current_len >= max_len) {
        close_current();
        current.clear();
        current_len = 0;
      }
      continue;
    }
    close_current();
    // Seed the next chunk with the trailing overlap of the closed one.
    std::size_t keep = std::min(overlap_sentences, current.size());
    std::vector<std::string> seed(current.end() - keep, current.end());
    std::size_t seed_len = 0;
    for (const auto& s : seed) seed_len += utf8_length(s) + (seed_len ? 1 : 0);

    std::size_t with_seed = seed_len + (seed.empty() ? 0 : 1) + sentence_len;
    if (!seed.empty() && with_seed < max_len) {
      current = std::move(seed);
      current.push_back(sentence);
      current_len = with_seed;
    } else {
      // Overlap would breach the budget; the sentence starts alone.
      current.assign(1, sentence);
      current_len = sentence_len;
      if (current_len >= max_len) {
        close_current();
        current.clear();
        current_len = 0;
      }
    }
  }
  close_current();
  return out;
}

std::filesystem::path write_vault(const ChunkSet& chunks, const std::filesystem::path& vault_dir) {
  std::filesystem::create_directories(vault_dir);
  std::filesystem::path file = vault_dir / (chunks.source_id + ".txt");
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write vault file: " + file.string());
  for (const auto& chunk : chunks.chunks) {
    std::string line = chunk;
    for (char& c : line) {
      if (c == '\n' || c == '\r') c = ' ';
    }
    out << line << '\n';
  }
  return file;
}

ChunkSet read_vault(const std::filesystem::path& file, std::size_t max_len,
                    std::size_t overlap_sentences) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read vault file: " + file.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ChunkSet out;
  out.source_id = file.stem().string();
  out.chunks = split_lines(content);
  out.max_len = max_len;
  out.overlap_sentences = overlap_sentences;
  return out;
}

}  // namespace greyscreen
