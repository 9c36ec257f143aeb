#pragma once

#include <string>
#include <vector>

#include "greyscreen/prompt.hpp"

namespace greyscreen {

struct InferenceConfig {
  std::string endpoint;  // http(s)://host[:port]
  std::string path = "/api/generate";
  std::string model;
  double temperature = 0.1;
  double timeout_s = 600.0;
  int retries = 2;

  std::string url() const { return endpoint + path; }
};

/// Composes the user message from the question and the retrieved chunks.
std::string compose_user_message(const ScreeningQuestion& question,
                                 const std::vector<std::string>& context);

/// POST {model, system, prompt, options.temperature, stream:false} and
/// return the generated text unmodified. Transport failures and 5xx are
/// retried up to cfg.retries times, then raised as TransportError;
/// malformed payloads raise ProtocolError.
std::string classify(const std::string& system_prompt, const ScreeningQuestion& question,
                     const std::vector<std::string>& context, const InferenceConfig& cfg);

}  // namespace greyscreen
