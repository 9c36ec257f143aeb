#include <doctest.h>

#include <fstream>
#include <set>

#include "greyscreen/csv.hpp"
#include "greyscreen/search.hpp"
#include "greyscreen/util.hpp"
#include "mock_endpoints.hpp"
#include "temp_dir.hpp"

using namespace greyscreen;

TEST_SUITE_BEGIN("search");

namespace {

QuerySpec test_query() {
  return {QueryStrategy::OrMerged, "testing", "intext:\"x\" filetype:pdf", "q1-testing"};
}

SearchApiConfig api_for(const testing::SearchApiMock& mock) {
  SearchApiConfig api;
  api.endpoint = mock.endpoint();
  api.api_key = "test-key";
  api.engine_id = "test-cx";
  api.page_delay_ms = 0;
  api.timeout_s = 5.0;
  return api;
}

std::vector<std::string> fixture_links_23() {
  // 23 items over 3 pages; the last three are not pdf links.
  std::vector<std::string> links;
  for (int i = 1; i <= 20; ++i) {
    links.push_back("http://files.example/docs/doc" + std::to_string(i) + ".pdf");
  }
  links.push_back("http://files.example/page1.html");
  links.push_back("http://files.example/page2");
  links.push_back("http://files.example/page3.htm");
  return links;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("pdf link detection ignores query strings and case") {
  CHECK(is_pdf_link("http://x/y.pdf"));
  CHECK(is_pdf_link("http://x/y.PDF"));
  CHECK(is_pdf_link("http://x/y.pdf?download=1&session=abc"));
  CHECK(is_pdf_link("http://x/y.pdf#page=3"));
  CHECK_FALSE(is_pdf_link("http://x/y.pdf.html"));
  CHECK_FALSE(is_pdf_link("http://x/y?file=z.pdf"));  // query, not path
  CHECK_FALSE(is_pdf_link("http://x/report"));
}

TEST_CASE("23 items across 3 pages yield 20 pdf hits with ranks 1..20") {
  testing::SearchApiMock mock(fixture_links_23());
  mock.start();
  testing::TempDir dir;
  QueryLog log(dir.path(), "q1-testing", "deadbeef");
  auto result = run_search(test_query(), api_for(mock), log);

  CHECK(result.items.size() == 23);
  REQUIRE(result.hits.size() == 20);
  for (int i = 0; i < 20; ++i) {
    CHECK(result.hits[i].rank == i + 1);
    CHECK(result.hits[i].query_id == "q1-testing");
  }
  CHECK(result.hits[0].id() == "q1-testing-1");
  CHECK(result.page_errors.empty());
  CHECK_FALSE(result.quota_exhausted);

  // ranks partition into pages of ten
  CHECK(result.hits[0].page_start_index == 1);
  CHECK(result.hits[10].page_start_index == 11);

  // every link appears verbatim in the TXT log, receipt order
  auto txt = read_text(log.txt_path);
  auto lines = split_lines(txt);
  REQUIRE(lines.size() == 23);
  auto links = fixture_links_23();
  for (std::size_t i = 0; i < links.size(); ++i) CHECK(lines[i] == links[i]);

  // CSV log carries ids and the pdf flag
  auto rows = csv::read_file(log.csv_path);
  REQUIRE(rows.size() == 24);  // header + 23
  CHECK(rows[0] == std::vector<std::string>{"id", "url", "is_pdf_link"});
  CHECK(rows[1][0] == "q1-testing-1");
  CHECK(rows[1][2] == "true");
  CHECK(rows[21][2] == "false");
}

TEST_CASE("zero items still create the logs") {
  testing::SearchApiMock mock({});
  mock.start();
  testing::TempDir dir;
  QueryLog log(dir.path(), "q1-testing", "");
  auto result = run_search(test_query(), api_for(mock), log);
  CHECK(result.hits.empty());
  CHECK(result.items.empty());
  CHECK(std::filesystem::exists(log.txt_path));
  CHECK(std::filesystem::exists(log.csv_path));
  CHECK(mock.requested_starts() == std::vector<int>{1});
}

TEST_CASE("pagination discipline: 10 full pages, no start beyond 91, 100 hits") {
  std::vector<std::string> links;
  for (int i = 1; i <= 150; ++i) {
    links.push_back("http://files.example/p" + std::to_string(i) + ".pdf");
  }
  testing::SearchApiMock mock(links);
  mock.start();
  testing::TempDir dir;
  QueryLog log(dir.path(), "q1-testing", "");
  auto result = run_search(test_query(), api_for(mock), log);

  CHECK(result.hits.size() == 100);
  auto starts = mock.requested_starts();
  CHECK(starts.size() == 10);  // no 11th request
  std::set<int> allowed{1, 11, 21, 31, 41, 51, 61, 71, 81, 91};
  for (int s : starts) {
    CHECK(allowed.count(s) == 1);
    CHECK(s <= 91);
    CHECK(s % 10 == 1);
  }
}

TEST_CASE("page error is recorded and ends the query without throwing") {
  auto links = fixture_links_23();
  testing::SearchApiMock mock(links);
  mock.set_fail_at_start(11, 500);
  mock.start();
  testing::TempDir dir;
  QueryLog log(dir.path(), "q1-testing", "");
  auto result = run_search(test_query(), api_for(mock), log);
  CHECK(result.items.size() == 10);  // first page only
  REQUIRE(result.page_errors.size() == 1);
  CHECK(result.page_errors[0].start_index == 11);
  CHECK_FALSE(result.quota_exhausted);
}

TEST_CASE("quota exhaustion is surfaced as a batch-level flag") {
  auto links = fixture_links_23();
  testing::SearchApiMock mock(links);
  mock.set_fail_at_start(11, 429);
  mock.start();
  testing::TempDir dir;
  QueryLog log(dir.path(), "q1-testing", "");
  auto result = run_search(test_query(), api_for(mock), log);
  CHECK(result.quota_exhausted);
  CHECK(result.items.size() == 10);  // partial results preserved
}

TEST_SUITE_END();
