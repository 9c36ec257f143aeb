#include "greyscreen/search.hpp"

#include <chrono>
#include <thread>

#include <nlohmann/json.hpp>

#include "greyscreen/csv.hpp"
#include "greyscreen/error.hpp"
#include "greyscreen/http_client.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

bool is_pdf_link(std::string_view url) {
  std::size_t cut = url.find_first_of("?#");
  std::string_view path = (cut == std::string_view::npos) ? url : url.substr(0, cut);
  return ends_with_ci(path, ".pdf");
}

QueryLog::QueryLog(const std::filesystem::path& dir, const std::string& query_id,
                   const std::string& config_hash) {
  std::filesystem::create_directories(dir);
  txt_path = dir / (query_id + ".txt");
  csv_path = dir / (query_id + ".csv");
  txt_.open(txt_path, std::ios::binary | std::ios::trunc);
  csv_.open(csv_path, std::ios::binary | std::ios::trunc);
  if (!txt_ || !csv_) throw ConfigError("cannot open query logs under " + dir.string());
  if (!config_hash.empty()) csv_ << "# config=" << config_hash << '\n';
  csv_ << "id,url,is_pdf_link\n";
}

void QueryLog::item(const std::string& query_id, const LoggedItem& entry) {
  txt_ << entry.url << '\n';
  csv::write_row(csv_, {query_id + "-" + std::to_string(entry.rank), entry.url,
                        entry.is_pdf ? "true" : "false"});
  txt_.flush();
  csv_.flush();
}

namespace {

constexpr int kPageSize = 10;
constexpr int kMaxResults = 100;

bool quota_exhausted_response(int status, const std::string& body) {
  if (status == 429) return true;
  if (status != 403) return false;
  return contains_ci(body, "quota") || contains_ci(body, "dailylimitexceeded") ||
         contains_ci(body, "ratelimitexceeded");
}

}  // namespace

QuerySearchResult run_search(const QuerySpec& query, const SearchApiConfig& api, QueryLog& log) {
  if (api.endpoint.empty() || api.api_key.empty() || api.engine_id.empty()) {
    throw ConfigError("search API endpoint, key and engine id are all required");
  }
  QuerySearchResult result;
  int rank = 0;

  for (int page = 0; page < kMaxResults / kPageSize; ++page) {
    const int start = 1 + page * kPageSize;
    if (page > 0 && api.page_delay_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(api.page_delay_ms));
    }
    http::Response res = http::get(api.endpoint,
                                   {{"key", api.api_key},
                                    {"cx", api.engine_id},
                                    {"q", query.rendered},
                                    {"start", std::to_string(start)}},
                                   api.timeout_s);
    if (!res.transport_ok) {
      result.page_errors.push_back({start, "transport: " + res.error});
      break;
    }
    if (quota_exhausted_response(res.status, res.body)) {
      result.quota_exhausted = true;
      result.page_errors.push_back({start, "quota exhausted (HTTP " +
                                               std::to_string(res.status) + ")"});
      break;
    }
    if (res.status != 200) {
      result.page_errors.push_back({start, "HTTP " + std::to_string(res.status)});
      break;
    }
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(res.body);
    } catch (const nlohmann::json::exception& e) {
      result.page_errors.push_back({start, std::string("malformed body: ") + e.what()});
      break;
    }
    if (!parsed.contains("items") || !parsed["items"].is_array() || parsed["items"].empty()) {
      break;  // no further items
    }

    int page_items = 0;
    for (const auto& item : parsed["items"]) {
      if (!item.contains("link") || !item["link"].is_string()) continue;
      ++page_items;
      ++rank;
      LoggedItem entry{rank, item["link"].get<std::string>(), false, start};
      entry.is_pdf = is_pdf_link(entry.url);
      log.item(query.id, entry);
      if (entry.is_pdf) {
        result.hits.push_back({query.id, rank, entry.url, start});
      }
      result.items.push_back(std::move(entry));
      if (static_cast<int>(result.hits.size()) >= kMaxResults) break;
    }
    if (static_cast<int>(result.hits.size()) >= kMaxResults) break;
    if (page_items < kPageSize) break;  // short page: no further results
  }
  return result;
}

}  // namespace greyscreen
