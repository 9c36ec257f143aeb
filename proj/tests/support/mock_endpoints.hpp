#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace httplib {
class Server;
}

namespace greyscreen::testing {

/// Localhost httplib server on an ephemeral port. Register routes, then
/// start().
class MockServer {
 public:
  MockServer();
  ~MockServer();
  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  httplib::Server& server();
  void start();
  std::string base_url() const;
  int port() const { return port_; }

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

/// Custom-search mock: pages a fixed link list in batches of ten through
/// GET <path>?key&cx&q&start. Records every start index received. The
/// response omits "items" when the slice is empty.
class SearchApiMock {
 public:
  explicit SearchApiMock(std::vector<std::string> links, std::string path = "/customsearch");
  void start() { server_.start(); }
  std::string endpoint() const { return server_.base_url() + path_; }

  std::vector<int> requested_starts() const;
  void set_fail_at_start(int start, int http_status);  // error page injection

 private:
  MockServer server_;
  std::string path_;
  std::vector<std::string> links_;
  mutable std::mutex mutex_;
  std::vector<int> starts_;
  int fail_start_ = 0;
  int fail_status_ = 0;
};

/// Deterministic embedding vector used by the embedding mock: 8 dims
/// derived from FNV-1a of the text, L2-normalized.
std::vector<double> mock_embedding(const std::string& text);

/// Ollama-style endpoints: POST /api/embeddings answers mock_embedding;
/// POST /api/generate answers the first scripted reply whose marker is a
/// substring of the prompt, else the default reply. Records request
/// bodies.
class LlmMock {
 public:
  LlmMock();
  void script(const std::string& marker, const std::string& reply);
  void set_default_reply(const std::string& reply);
  void start() { server_.start(); }
  std::string base_url() const { return server_.base_url(); }

  std::vector<std::string> generate_bodies() const;

 private:
  MockServer server_;
  mutable std::mutex mutex_;
  std::vector<std::pair<std::string, std::string>> scripts_;
  std::string default_reply_ = "I cannot determine this.";
  std::vector<std::string> bodies_;
};

}  // namespace greyscreen::testing
