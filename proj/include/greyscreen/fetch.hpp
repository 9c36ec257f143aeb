#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace greyscreen {

struct CandidateSource {
  std::string id;
  std::string url;
};

enum class FetchStatus { Downloaded, NotAvailable };

struct FetchReason {
  enum class Kind { None, HttpError, Timeout, WrongMime, EmptyBody, BlockPageSuspected };
  Kind kind = Kind::None;
  int http_status = 0;  // for HttpError (0 = transport-level)
  std::string detail;   // actual content type, extractor message, ...
};

std::string to_string(const FetchReason& reason);

struct FetchOutcome {
  std::string source_id;
  std::string url;
  FetchStatus status = FetchStatus::NotAvailable;
  FetchReason reason;
  std::filesystem::path local_path;  // set iff Downloaded
  std::string content_type;
  std::uint64_t bytes = 0;
  std::string sha256;
};

struct FetchOptions {
  double timeout_s = 12.0;
  std::filesystem::path cache_dir;
};

/// Downloads one candidate with redirect following (bounded), validating
/// HTTP 200, an application/pdf content type, a non-empty body and the
/// %PDF magic. Valid bodies land in cache_dir under their SHA-256, so
/// refetching unchanged content is idempotent. Each failed validation
/// maps to exactly one NotAvailable reason; never throws for per-document
/// failures.
FetchOutcome fetch_document(const CandidateSource& source, const FetchOptions& options);

/// True when the extracted text matches a block-page marker
/// (case-insensitive) or is empty — such documents carry no screenable
/// content even though the PDF itself was valid.
bool detect_block_page(std::string_view normalized_text, const std::vector<std::string>& markers);

std::vector<std::string> default_block_markers();

/// Fetches sources with bounded parallelism. `on_outcome` fires exactly
/// once per source, in input order, serialized.
std::vector<FetchOutcome> fetch_batch(const std::vector<CandidateSource>& sources,
                                      const FetchOptions& options, int parallelism,
                                      const std::function<void(const FetchOutcome&)>& on_outcome);

}  // namespace greyscreen
