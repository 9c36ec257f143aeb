#include "greyscreen/fetch.hpp"

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "greyscreen/error.hpp"
#include "greyscreen/hash.hpp"
#include "greyscreen/http_client.hpp"
#include "greyscreen/pdf_text.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

std::string to_string(const FetchReason& reason) {
  switch (reason.kind) {
    case FetchReason::Kind::None:
      return "";
    case FetchReason::Kind::HttpError:
      if (reason.http_status > 0) return "http_error(" + std::to_string(reason.http_status) + ")";
      return reason.detail.empty() ? "http_error" : "http_error(" + reason.detail + ")";
    case FetchReason::Kind::Timeout:
      return "timeout";
    case FetchReason::Kind::WrongMime:
      return "wrong_mime(" + reason.detail + ")";
    case FetchReason::Kind::EmptyBody:
      return "empty_body";
    case FetchReason::Kind::BlockPageSuspected:
      return "block_page_suspected";
  }
  return "";
}

FetchOutcome fetch_document(const CandidateSource& source, const FetchOptions& options) {
  FetchOutcome outcome;
  outcome.source_id = source.id;
  outcome.url = source.url;

  auto fail = [&](FetchReason::Kind kind, int status = 0, std::string detail = {}) {
    outcome.status = FetchStatus::NotAvailable;
    outcome.reason = {kind, status, std::move(detail)};
    return outcome;
  };

  http::Response res = http::get(source.url, {}, options.timeout_s);
  if (!res.transport_ok) {
    if (res.timed_out) return fail(FetchReason::Kind::Timeout);
    if (res.redirect_limit) return fail(FetchReason::Kind::HttpError, 0, "redirect limit");
    return fail(FetchReason::Kind::HttpError, 0, res.error);
  }
  outcome.content_type = res.content_type;
  if (res.status != 200) return fail(FetchReason::Kind::HttpError, res.status);
  if (!contains_ci(res.content_type, "application/pdf")) {
    // Strip charset etc. so the reason carries the bare type.
    std::string bare = trim(res.content_type.substr(0, res.content_type.find(';')));
    return fail(FetchReason::Kind::WrongMime, 0, bare.empty() ? "unknown" : bare);
  }
  if (res.body.empty()) return fail(FetchReason::Kind::EmptyBody);
  if (!pdf::looks_like_pdf(res.body)) {
    return fail(FetchReason::Kind::WrongMime, 0, "missing %PDF magic");
  }

  outcome.bytes = res.body.size();
  outcome.sha256 = sha256_hex(res.body);
  std::filesystem::create_directories(options.cache_dir);
  outcome.local_path = options.cache_dir / (outcome.sha256 + ".pdf");
  if (!std::filesystem::exists(outcome.local_path)) {
    std::filesystem::path tmp = outcome.local_path;
    tmp += ".part";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        return fail(FetchReason::Kind::HttpError, 0, "cannot write cache file");
      }
      out.write(res.body.data(), static_cast<std::streamsize>(res.body.size()));
    }
    std::filesystem::rename(tmp, outcome.local_path);
  }
  outcome.status = FetchStatus::Downloaded;
  return outcome;
}

std::vector<std::string> default_block_markers() {
  return {"enable javascript", "captcha", "access denied", "request blocked"};
}

bool detect_block_page(std::string_view normalized_text,
                       const std::vector<std::string>& markers) {
  if (trim(normalized_text).empty()) return true;
  for (const auto& marker : markers) {
    if (contains_ci(normalized_text, marker)) return true;
  }
  return false;
}

std::vector<FetchOutcome> fetch_batch(const std::vector<CandidateSource>& sources,
                                      const FetchOptions& options, int parallelism,
                                      const std::function<void(const FetchOutcome&)>& on_outcome) {
  if (parallelism < 1) throw InvalidInputError("fetch parallelism must be >= 1");

  std::vector<std::optional<FetchOutcome>> slots(sources.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::condition_variable ready;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= sources.size()) return;
      FetchOutcome outcome = fetch_document(sources[i], options);
      {
        std::lock_guard lock(mutex);
        slots[i] = std::move(outcome);
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> threads;
  std::size_t n_threads = std::min<std::size_t>(parallelism, std::max<std::size_t>(sources.size(), 1));
  threads.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);

  // Emit outcomes in input order as they complete.
  std::vector<FetchOutcome> outcomes;
  outcomes.reserve(sources.size());
  {
    std::unique_lock lock(mutex);
    for (std::size_t i = 0; i < sources.size(); ++i) {
      ready.wait(lock, [&] { return slots[i].has_value(); });
      outcomes.push_back(std::move(*slots[i]));
      if (on_outcome) on_outcome(outcomes.back());
    }
  }
  for (auto& t : threads) t.join();
  return outcomes;
}

}  // namespace greyscreen
