#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "greyscreen/terms.hpp"

namespace greyscreen {

struct SearchApiConfig {
  std::string endpoint;  // full URL of the custom-search GET endpoint
  std::string api_key;
  std::string engine_id;
  int page_delay_ms = 1000;  // pacing between page requests
  double timeout_s = 30.0;
};

struct SearchHit {
  std::string query_id;
  int rank = 0;  // 1-based position in the query's result stream
  std::string url;
  int page_start_index = 1;  // 1, 11, ..., 91

  std::string id() const { return query_id + "-" + std::to_string(rank); }
};

struct LoggedItem {
  int rank = 0;
  std::string url;
  bool is_pdf = false;
  int page_start_index = 1;
};

struct PageError {
  int start_index = 1;
  std::string message;
};

struct QuerySearchResult {
  std::vector<LoggedItem> items;
  std::vector<SearchHit> hits;
  std::vector<PageError> page_errors;
  bool quota_exhausted = false;
};

/// True when the URL path component ends in ".pdf", query string and
/// fragment ignored, case-insensitive.
bool is_pdf_link(std::string_view url);

/// TXT + CSV sink for one query: <id>.txt gets one URL per line in
/// receipt order; <id>.csv gets id,url,is_pdf_link rows.
class QueryLog {
 public:
  QueryLog(const std::filesystem::path& dir, const std::string& query_id,
           const std::string& config_hash);
  void item(const std::string& query_id, const LoggedItem& entry);

  std::filesystem::path txt_path;
  std::filesystem::path csv_path;

 private:
  std::ofstream txt_;
  std::ofstream csv_;
};

/// Pages through the custom-search API (start = 1, 11, ..., 91), logging
/// every returned link and collecting `.pdf` links as hits. A page-level
/// failure is recorded and ends this query without aborting the batch; a
/// quota-exhausted response is flagged for the caller.
QuerySearchResult run_search(const QuerySpec& query, const SearchApiConfig& api, QueryLog& log);

}  // namespace greyscreen
