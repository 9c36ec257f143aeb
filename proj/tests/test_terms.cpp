#include <doctest.h>

#include "greyscreen/error.hpp"
#include "greyscreen/terms.hpp"

using namespace greyscreen;

TEST_SUITE_BEGIN("terms");

namespace {

TermSet protocol_terms() {
  return TermSet{
      {"Aviation", "Aeronautics", "Aerospace", "Flight Science", "Air Transportation",
       "Aeromechanics", "Air Navigation", "Avionics", "Airspace Management"},
      {"testing", "test", "verification", "validation", "quality assessment"},
  };
}

}  // namespace

TEST_CASE("or-merged protocol vocabulary yields five distinct queries") {
  auto specs = build_queries(protocol_terms(), QueryStrategy::OrMerged);
  REQUIRE(specs.size() == 5);
  CHECK(specs[0].intervention_term == "testing");
  CHECK(specs[0].id == "q1-testing");
  CHECK(specs[4].id == "q5-quality-assessment");
  CHECK(specs[0].rendered ==
        "(intext:\"Aviation\" OR intext:\"Aeronautics\" OR intext:\"Aerospace\" OR "
        "intext:\"Flight Science\" OR intext:\"Air Transportation\" OR "
        "intext:\"Aeromechanics\" OR intext:\"Air Navigation\" OR intext:\"Avionics\" OR "
        "intext:\"Airspace Management\") AND intext:\"testing\" AND intext:\"software\" "
        "filetype:pdf");
}

TEST_CASE("every rendered query wraps phrases and ends with the pdf filter") {
  for (auto strategy : {QueryStrategy::OrMerged, QueryStrategy::PairwiseAnd}) {
    for (const auto& spec : build_queries(protocol_terms(), strategy)) {
      CHECK(spec.rendered.find("intext:\"" + spec.intervention_term + "\"") !=
            std::string::npos);
      CHECK(spec.rendered.find("intext:\"software\"") != std::string::npos);
      REQUIRE(spec.rendered.size() >= 12);
      CHECK(spec.rendered.substr(spec.rendered.size() - 12) == "filetype:pdf");
    }
  }
}

TEST_CASE("single pairwise combination") {
  TermSet terms{{"A"}, {"t"}};
  auto specs = build_queries(terms, QueryStrategy::PairwiseAnd);
  REQUIRE(specs.size() == 1);
  CHECK(specs[0].rendered == "intext:\"A\" AND intext:\"t\" AND intext:\"software\" filetype:pdf");
}

TEST_CASE("pairwise cross product in population-major order") {
  TermSet terms{{"p1", "p2", "p3"}, {"i1", "i2"}};
  auto specs = build_queries(terms, QueryStrategy::PairwiseAnd);
  REQUIRE(specs.size() == 6);
  CHECK(specs[0].rendered.find("\"p1\"") != std::string::npos);
  CHECK(specs[0].rendered.find("\"i1\"") != std::string::npos);
  CHECK(specs[1].rendered.find("\"p1\"") != std::string::npos);
  CHECK(specs[1].rendered.find("\"i2\"") != std::string::npos);
  CHECK(specs[2].rendered.find("\"p2\"") != std::string::npos);
  CHECK(specs[5].rendered.find("\"p3\"") != std::string::npos);
  CHECK(specs[5].rendered.find("\"i2\"") != std::string::npos);
}

TEST_CASE("build_queries is pure") {
  auto a = build_queries(protocol_terms(), QueryStrategy::OrMerged);
  auto b = build_queries(protocol_terms(), QueryStrategy::OrMerged);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rendered == b[i].rendered);
    CHECK(a[i].id == b[i].id);
  }
}

TEST_CASE("term validation") {
  CHECK_THROWS_AS(build_queries(TermSet{{}, {"t"}}, QueryStrategy::OrMerged),
                  InvalidInputError);
  CHECK_THROWS_AS(build_queries(TermSet{{"a"}, {}}, QueryStrategy::OrMerged),
                  InvalidInputError);
  CHECK_THROWS_AS(build_queries(TermSet{{"a", " "}, {"t"}}, QueryStrategy::OrMerged),
                  InvalidInputError);
  CHECK_THROWS_AS(build_queries(TermSet{{"a", "A"}, {"t"}}, QueryStrategy::OrMerged),
                  InvalidInputError);
  CHECK_THROWS_AS(build_queries(TermSet{{"a\"b"}, {"t"}}, QueryStrategy::OrMerged),
                  InvalidInputError);
}

TEST_SUITE_END();
