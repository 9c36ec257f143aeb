#include "greyscreen/http_client.hpp"

#include <chrono>
#include <cmath>

#include <httplib.h>

namespace greyscreen::http {

UrlParts split_url(const std::string& url) {
  UrlParts parts;
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return parts;
  std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") return parts;
  std::size_t host_start = scheme_end + 3;
  if (host_start >= url.size()) return parts;
  std::size_t path_start = url.find('/', host_start);
  if (path_start == std::string::npos) {
    parts.base = url;
    parts.path = "/";
  } else {
    parts.base = url.substr(0, path_start);
    parts.path = url.substr(path_start);
  }
  if (parts.base.size() == host_start) return parts;  // empty host
  parts.valid = true;
  return parts;
}

namespace {

void configure(httplib::Client& cli, double timeout_s) {
  auto whole = static_cast<time_t>(timeout_s);
  auto frac = static_cast<time_t>((timeout_s - std::floor(timeout_s)) * 1e6);
  cli.set_connection_timeout(whole, frac);
  cli.set_read_timeout(whole, frac);
  cli.set_write_timeout(whole, frac);
  cli.set_follow_location(true);
}

Response finish(const httplib::Result& res, std::chrono::steady_clock::time_point started,
                double timeout_s) {
  Response out;
  if (res) {
    out.transport_ok = true;
    out.status = res->status;
    out.body = res->body;
    out.content_type = res->get_header_value("Content-Type");
    return out;
  }
  out.error = httplib::to_string(res.error());
  if (res.error() == httplib::Error::ExceedRedirectCount) {
    out.redirect_limit = true;
    return out;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (res.error() == httplib::Error::ConnectionTimeout || elapsed >= timeout_s) {
    out.timed_out = true;
  }
  return out;
}

}  // namespace

Response get(const std::string& url,
             const std::vector<std::pair<std::string, std::string>>& params,
             double timeout_s) {
  UrlParts parts = split_url(url);
  if (!parts.valid) {
    Response out;
    out.error = "invalid URL: " + url;
    return out;
  }
  httplib::Client cli(parts.base);
  configure(cli, timeout_s);

  std::string path = parts.path;
  if (!params.empty()) {
    httplib::Params p(params.begin(), params.end());
    path = httplib::append_query_params(path, p);
  }
  auto started = std::chrono::steady_clock::now();
  auto res = cli.Get(path);
  return finish(res, started, timeout_s);
}

Response post_json(const std::string& url, const std::string& json_body, double timeout_s) {
  UrlParts parts = split_url(url);
  if (!parts.valid) {
    Response out;
    out.error = "invalid URL: " + url;
    return out;
  }
  httplib::Client cli(parts.base);
  configure(cli, timeout_s);
  auto started = std::chrono::steady_clock::now();
  auto res = cli.Post(parts.path, json_body, "application/json");
  return finish(res, started, timeout_s);
}

}  // namespace greyscreen::http
