#pragma once

#include <string>
#include <utility>
#include <vector>

namespace greyscreen::http {

struct Response {
  bool transport_ok = false;  // a response arrived (any status)
  int status = 0;
  std::string body;
  std::string content_type;
  bool timed_out = false;
  bool redirect_limit = false;
  std::string error;  // transport error text when !transport_ok
};

struct UrlParts {
  std::string base;        // scheme://host[:port]
  std::string path;        // begins with '/', query included
  bool valid = false;
};

UrlParts split_url(const std::string& url);

/// GET with optional extra query parameters appended to the URL's own.
/// Follows redirects (bounded). Never throws; failures land in Response.
Response get(const std::string& url,
             const std::vector<std::pair<std::string, std::string>>& params,
             double timeout_s);

/// POST of a JSON body (content-type application/json).
Response post_json(const std::string& url, const std::string& json_body, double timeout_s);

}  // namespace greyscreen::http
