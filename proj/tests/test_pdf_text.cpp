#include <doctest.h>

#include <fstream>

#include "fixture_pdf.hpp"
#include "greyscreen/error.hpp"
#include "greyscreen/pdf_text.hpp"
#include "greyscreen/textprep.hpp"
#include "temp_dir.hpp"

using namespace greyscreen;

TEST_SUITE_BEGIN("pdf_text");

namespace {

std::filesystem::path write_file(const testing::TempDir& dir, const std::string& name,
                                 const std::string& bytes) {
  auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  return path;
}

}  // namespace

TEST_CASE("single page sentences survive extraction") {
  testing::TempDir dir;
  auto path = write_file(dir, "a.pdf", testing::build_pdf({"A b. C d? E f."}));
  auto doc = extract_text("a", path);
  REQUIRE(doc.sentences.size() == 3);
  CHECK(doc.sentences[0] == "A b.");
  CHECK(doc.sentences[1] == "C d?");
  CHECK(doc.sentences[2] == "E f.");
}

TEST_CASE("empty middle page is skipped, page order kept") {
  testing::TempDir dir;
  auto path = write_file(dir, "b.pdf", testing::build_pdf({"First page.", "", "Third page."}));
  auto doc = extract_text("b", path);
  CHECK(doc.raw_text == "First page. Third page.");
}

TEST_CASE("image-only pages extract as empty text") {
  testing::TempDir dir;
  auto bytes = testing::build_pdf_raw_contents({"q 100 0 0 100 100 600 cm Q"});
  auto path = write_file(dir, "img.pdf", bytes);
  auto doc = extract_text("img", path);
  CHECK(doc.raw_text.empty());
  CHECK(doc.sentences.empty());
}

TEST_CASE("flate-compressed content streams decode") {
  testing::TempDir dir;
  auto path = write_file(dir, "z.pdf",
                         testing::build_pdf({"Compressed body. Still readable."}, true));
  auto doc = extract_text("z", path);
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[1] == "Still readable.");
}

TEST_CASE("TJ arrays, hex strings and escapes") {
  testing::TempDir dir;
  std::string content =
      "BT /F1 12 Tf 72 720 Td [(Sp) -60 (lit) -250 (words.)] TJ ET\n"
      "BT /F1 12 Tf 72 700 Td <48692E> Tj ET\n"
      "BT /F1 12 Tf 72 680 Td (Par\\(en\\)s.) Tj ET";
  auto path = write_file(dir, "tj.pdf", testing::build_pdf_raw_contents({content}));
  auto doc = extract_text("tj", path);
  // -60 is kerning (no gap), -250 reads as a word gap.
  CHECK(doc.raw_text == "Split words. Hi. Par(en)s.");
}

TEST_CASE("utf-16be strings decode to utf-8") {
  testing::TempDir dir;
  // FE FF BOM, then "Ab."
  std::string content = "BT /F1 12 Tf 72 720 Td <FEFF00410062002E> Tj ET";
  auto path = write_file(dir, "u.pdf", testing::build_pdf_raw_contents({content}));
  auto doc = extract_text("u", path);
  CHECK(doc.raw_text == "Ab.");
}

TEST_CASE("encrypted files are rejected with the source id") {
  testing::TempDir dir;
  auto path = write_file(dir, "enc.pdf", testing::build_encrypted_pdf());
  CHECK(pdf::looks_like_pdf(testing::build_encrypted_pdf()));
  try {
    extract_text("enc-1", path);
    FAIL("expected ExtractError");
  } catch (const ExtractError& e) {
    CHECK(e.source_id == "enc-1");
    CHECK(std::string(e.what()).find("encrypted") != std::string::npos);
  }
}

TEST_CASE("non-pdf bytes are rejected") {
  testing::TempDir dir;
  auto path = write_file(dir, "x.pdf", "<html>not a pdf</html>");
  CHECK_THROWS_AS(extract_text("x", path), ExtractError);
  CHECK_FALSE(pdf::looks_like_pdf("<html>"));
}

TEST_CASE("multi-page text concatenates in page order") {
  testing::TempDir dir;
  std::vector<std::string> pages;
  for (int i = 1; i <= 5; ++i) pages.push_back("Page " + std::to_string(i) + " text.");
  auto path = write_file(dir, "m.pdf", testing::build_pdf(pages));
  auto doc = extract_text("m", path);
  REQUIRE(doc.sentences.size() == 5);
  CHECK(doc.sentences[0] == "Page 1 text.");
  CHECK(doc.sentences[4] == "Page 5 text.");
}

TEST_SUITE_END();
