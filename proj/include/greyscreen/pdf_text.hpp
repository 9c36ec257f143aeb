#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace greyscreen::pdf {

struct PdfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// True when the buffer starts with the %PDF magic.
bool looks_like_pdf(std::string_view bytes);

/// Plain-text extraction: the text shown by each page's content streams,
/// in page order. Understands classic cross-reference layouts, object
/// streams and FlateDecode; no OCR, no layout reconstruction. Pages
/// without text operators yield empty strings. Throws PdfError for
/// encrypted or structurally unreadable files.
std::vector<std::string> page_texts(std::string_view bytes);
std::vector<std::string> page_texts(const std::filesystem::path& file);

}  // namespace greyscreen::pdf
