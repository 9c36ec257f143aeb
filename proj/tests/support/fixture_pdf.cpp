#include "fixture_pdf.hpp"

#include <zlib.h>

#include <cstdio>
#include <stdexcept>

namespace greyscreen::testing {

namespace {

std::string deflate_bytes(const std::string& in) {
  uLongf bound = compressBound(static_cast<uLong>(in.size()));
  std::string out(bound, '\0');
  if (compress2(reinterpret_cast<Bytef*>(out.data()), &bound,
                reinterpret_cast<const Bytef*>(in.data()), static_cast<uLong>(in.size()),
                Z_BEST_SPEED) != Z_OK) {
    throw std::runtime_error("deflate failed");
  }
  out.resize(bound);
  return out;
}

class Builder {
 public:
  int add_object(const std::string& body) {
    bodies_.push_back(body);
    return static_cast<int>(bodies_.size());
  }

  std::string finish(int root_obj, const std::string& trailer_extra = {}) {
    std::string out = "%PDF-1.4\n";
    std::vector<std::size_t> offsets;
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
      offsets.push_back(out.size());
      out += std::to_string(i + 1) + " 0 obj\n" + bodies_[i] + "\nendobj\n";
    }
    std::size_t xref_at = out.size();
    char line[40];
    out += "xref\n0 " + std::to_string(bodies_.size() + 1) + "\n";
    out += "0000000000 65535 f \n";
    for (std::size_t off : offsets) {
      std::snprintf(line, sizeof(line), "%010zu 00000 n \n", off);
      out += line;
    }
    out += "trailer\n<< /Size " + std::to_string(bodies_.size() + 1) + " /Root " +
           std::to_string(root_obj) + " 0 R" + trailer_extra + " >>\nstartxref\n" +
           std::to_string(xref_at) + "\n%%EOF\n";
    return out;
  }

 private:
  std::vector<std::string> bodies_;
};

std::string stream_object(const std::string& content, bool compress) {
  std::string data = compress ? deflate_bytes(content) : content;
  std::string dict = "<< /Length " + std::to_string(data.size());
  if (compress) dict += " /Filter /FlateDecode";
  dict += " >>";
  return dict + "\nstream\n" + data + "\nendstream";
}

std::string assemble(const std::vector<std::string>& content_streams, bool compress) {
  Builder builder;
  const int catalog = 1;
  const int pages = 2;
  const int font = 3;
  int next = 4;

  std::string kids;
  std::vector<std::pair<int, int>> page_objs;  // page num, content num
  for (std::size_t i = 0; i < content_streams.size(); ++i) {
    int page_num = next++;
    int content_num = next++;
    page_objs.emplace_back(page_num, content_num);
    if (!kids.empty()) kids += ' ';
    kids += std::to_string(page_num) + " 0 R";
  }

  builder.add_object("<< /Type /Catalog /Pages " + std::to_string(pages) + " 0 R >>");
  builder.add_object("<< /Type /Pages /Kids [" + kids + "] /Count " +
                     std::to_string(content_streams.size()) + " >>");
  builder.add_object("<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>");
  for (std::size_t i = 0; i < content_streams.size(); ++i) {
    builder.add_object("<< /Type /Page /Parent " + std::to_string(pages) + " 0 R /MediaBox " +
                       "[0 0 612 792] /Resources << /Font << /F1 " + std::to_string(font) +
                       " 0 R >> >> /Contents " + std::to_string(page_objs[i].second) +
                       " 0 R >>");
    builder.add_object(stream_object(content_streams[i], compress));
  }
  return builder.finish(catalog);
}

}  // namespace

std::string escape_pdf_string(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string build_pdf(const std::vector<std::string>& page_texts, bool compress) {
  std::vector<std::string> contents;
  contents.reserve(page_texts.size());
  for (const auto& text : page_texts) {
    if (text.empty()) {
      contents.emplace_back();
    } else {
      contents.push_back("BT /F1 12 Tf 72 720 Td (" + escape_pdf_string(text) + ") Tj ET");
    }
  }
  return assemble(contents, compress);
}

std::string build_pdf_raw_contents(const std::vector<std::string>& content_streams,
                                   bool compress) {
  return assemble(content_streams, compress);
}

std::string build_encrypted_pdf() {
  Builder builder;
  builder.add_object("<< /Type /Catalog /Pages 2 0 R >>");
  builder.add_object("<< /Type /Pages /Kids [3 0 R] /Count 1 >>");
  builder.add_object("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>");
  int enc = builder.add_object("<< /Filter /Standard /V 1 /R 2 /O (x) /U (y) /P -44 >>");
  return builder.finish(1, " /Encrypt " + std::to_string(enc) + " 0 R");
}

}  // namespace greyscreen::testing
