#include "greyscreen/error.hpp"

namespace greyscreen {

ExtractError::ExtractError(std::string id, const std::string& msg)
    : std::runtime_error("extract[" + id + "]: " + msg), source_id(std::move(id)) {}

RenderError::RenderError(std::string name)
    : std::runtime_error("prompt template is missing '" + name + "'"),
      placeholder(std::move(name)) {}

}  // namespace greyscreen
