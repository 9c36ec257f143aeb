#include <doctest.h>

#include "greyscreen/util.hpp"

using namespace greyscreen;

TEST_SUITE_BEGIN("util");

TEST_CASE("normalize_whitespace collapses runs and trims") {
  CHECK(normalize_whitespace("  a\t\tb \n c  ") == "a b c");
  CHECK(normalize_whitespace("") == "");
  CHECK(normalize_whitespace(" \n\t ") == "");
  CHECK(normalize_whitespace("already clean") == "already clean");
}

TEST_CASE("utf8_length counts scalars, not bytes") {
  CHECK(utf8_length("abc") == 3);
  CHECK(utf8_length("") == 0);
  CHECK(utf8_length("caf\xC3\xA9") == 4);          // é is two bytes
  CHECK(utf8_length("\xE2\x82\xAC") == 1);          // euro sign, three bytes
  CHECK(utf8_length("a\xF0\x9F\x9A\x80z") == 3);    // four-byte emoji
}

TEST_CASE("number_word") {
  CHECK(number_word(4) == "four");
  CHECK(number_word(5) == "five");
  CHECK(number_word(13) == "thirteen");
  CHECK(number_word(21) == "twenty-one");
  CHECK(number_word(40) == "forty");
  CHECK(number_word(137) == "137");
}

TEST_CASE("slugify") {
  CHECK(slugify("quality assessment") == "quality-assessment");
  CHECK(slugify("Flight Science") == "flight-science");
  CHECK(slugify("testing") == "testing");
  CHECK(slugify("  A+B  ") == "a-b");
}

TEST_CASE("contains/ends_with case-insensitive") {
  CHECK(contains_ci("Please complete the CAPTCHA", "captcha"));
  CHECK_FALSE(contains_ci("capt", "captcha"));
  CHECK(ends_with_ci("report.PDF", ".pdf"));
  CHECK_FALSE(ends_with_ci("report.pdfx", ".pdf"));
}

TEST_CASE("split_lines") {
  auto lines = split_lines("a\nb\r\nc\n");
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "a");
  CHECK(lines[1] == "b");
  CHECK(lines[2] == "c");
}

TEST_SUITE_END();
