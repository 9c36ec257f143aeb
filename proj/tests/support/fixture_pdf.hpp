#pragma once

#include <string>
#include <vector>

namespace greyscreen::testing {

/// Classic single-font PDF with one page per entry; an empty string makes
/// a page with an empty content stream. Content streams are optionally
/// FlateDecode-compressed.
std::string build_pdf(const std::vector<std::string>& page_texts, bool compress = false);

/// Same structure but raw content streams supplied verbatim (for pages
/// that draw without text operators, TJ arrays, hex strings, ...).
std::string build_pdf_raw_contents(const std::vector<std::string>& content_streams,
                                   bool compress = false);

/// Structurally valid PDF whose trailer carries /Encrypt.
std::string build_encrypted_pdf();

std::string escape_pdf_string(const std::string& text);

}  // namespace greyscreen::testing
