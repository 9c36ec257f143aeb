#pragma once

#include <stdexcept>
#include <string>

namespace greyscreen {

/// Caller-supplied values violate a precondition (term sets, vote arity,
/// plan parameters, ...).
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Configuration problems: missing keys, out-of-range values, paths that
/// do not exist.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Network-level failure (connect, read, write, timeout). Retryable.
struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Endpoint answered but the payload does not match the wire contract.
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A PDF that cannot be read (broken structure, encryption).
struct ExtractError : std::runtime_error {
  ExtractError(std::string id, const std::string& msg);
  std::string source_id;
};

/// A prompt template field required by the renderer is missing or empty.
struct RenderError : std::runtime_error {
  explicit RenderError(std::string name);
  std::string placeholder;
};

}  // namespace greyscreen
