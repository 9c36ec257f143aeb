#include "greyscreen/inference.hpp"

#include <nlohmann/json.hpp>

#include "greyscreen/error.hpp"
#include "greyscreen/http_client.hpp"

namespace greyscreen {

std::string compose_user_message(const ScreeningQuestion& question,
                                 const std::vector<std::string>& context) {
  std::string out = question.text;
  if (!context.empty()) {
    out += "\n\nContext:\n";
    for (std::size_t i = 0; i < context.size(); ++i) {
      if (i) out += '\n';
      out += context[i];
    }
  }
  return out;
}

std::string classify(const std::string& system_prompt, const ScreeningQuestion& question,
                     const std::vector<std::string>& context, const InferenceConfig& cfg) {
  nlohmann::json body;
  body["model"] = cfg.model;
  body["system"] = system_prompt;
  body["prompt"] = compose_user_message(question, context);
  body["options"]["temperature"] = cfg.temperature;
  body["stream"] = false;
  const std::string payload = body.dump();

  http::Response res;
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    res = http::post_json(cfg.url(), payload, cfg.timeout_s);
    if (res.transport_ok && res.status < 500) break;
  }
  if (!res.transport_ok) {
    throw TransportError("inference endpoint: " + res.error);
  }
  if (res.status >= 500) {
    throw TransportError("inference endpoint returned HTTP " + std::to_string(res.status));
  }
  if (res.status != 200) {
    throw ProtocolError("inference endpoint returned HTTP " + std::to_string(res.status));
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(res.body);
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("inference response is not JSON: ") + e.what());
  }
  if (parsed.contains("response") && parsed["response"].is_string()) {
    return parsed["response"].get<std::string>();
  }
  // Chat-style endpoints nest the text under message.content.
  if (parsed.contains("message") && parsed["message"].is_object() &&
      parsed["message"].contains("content") && parsed["message"]["content"].is_string()) {
    return parsed["message"]["content"].get<std::string>();
  }
  throw ProtocolError("inference response carries no generated text");
}

}  // namespace greyscreen
