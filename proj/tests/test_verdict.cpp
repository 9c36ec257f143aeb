#include <doctest.h>

#include "greyscreen/verdict.hpp"

using namespace greyscreen;

TEST_SUITE_BEGIN("verdict");

TEST_CASE("canonical yes output") {
  auto v = parse_response(
      "*YES*; Confidence = 94%; The document explains how to test context-awareness software "
      "testing.");
  CHECK(v.choice == Choice::Yes);
  REQUIRE(v.confidence.has_value());
  CHECK(*v.confidence == 94);
  CHECK(v.explanation ==
        "The document explains how to test context-awareness software testing.");
}

TEST_CASE("canonical doubt output") {
  auto v = parse_response(
      "*DOUBT*; Confidence = 91%; The document regards model-based testing to support the "
      "generation of context-awareness test cases.");
  CHECK(v.choice == Choice::Doubt);
  CHECK(*v.confidence == 91);
  CHECK(v.explanation ==
        "The document regards model-based testing to support the generation of "
        "context-awareness test cases.");
}

TEST_CASE("canonical no output") {
  auto v = parse_response(
      "*NO*; Confidence = 82%; The document explains how to use formal methods to test "
      "software systems.");
  CHECK(v.choice == Choice::No);
  CHECK(*v.confidence == 82);
  CHECK(v.explanation ==
        "The document explains how to use formal methods to test software systems.");
}

TEST_CASE("unparseable output becomes ParseFailed, never a throw") {
  auto v = parse_response("I cannot determine this.");
  CHECK(v.choice == Choice::ParseFailed);
  CHECK_FALSE(v.confidence.has_value());
  CHECK(v.raw_response == "I cannot determine this.");

  CHECK(parse_response("").choice == Choice::ParseFailed);
  CHECK(parse_response("Confidence = 90%").choice == Choice::ParseFailed);  // no choice token
}

TEST_CASE("choice without any confidence is unusable") {
  CHECK(parse_response("*YES*, definitely").choice == Choice::ParseFailed);
}

TEST_CASE("asterisks are optional, case folds") {
  auto v = parse_response("yes; confidence = 88%; fine");
  CHECK(v.choice == Choice::Yes);
  CHECK(*v.confidence == 88);
  CHECK(v.explanation == "fine");

  auto d = parse_response("Doubt. Confidence = 86%. unsure");
  CHECK(d.choice == Choice::Doubt);
}

TEST_CASE("first token wins") {
  auto v = parse_response("NO (although one could argue YES); Confidence = 70%; mixed");
  CHECK(v.choice == Choice::No);
}

TEST_CASE("no is word-bounded") {
  // "not", "nothing", "knows" must not read as a NO choice
  auto v = parse_response("nothing notable, knows? Confidence = 50%");
  CHECK(v.choice == Choice::ParseFailed);
  auto v2 = parse_response("It is not relevant: no. Confidence = 93%");
  CHECK(v2.choice == Choice::No);
}

TEST_CASE("bare percentage fallback") {
  auto v = parse_response("*NO* 55% irrelevant");
  CHECK(v.choice == Choice::No);
  CHECK(*v.confidence == 55);
}

TEST_CASE("confidence above 100 is not a confidence") {
  auto v = parse_response("*YES*; Confidence = 940%; huge");
  CHECK(v.choice == Choice::ParseFailed);
}

TEST_CASE("explanation keeps its own semicolons") {
  auto v = parse_response("*YES*; Confidence = 94%; first; second; third.");
  CHECK(v.explanation == "first; second; third.");
}

TEST_CASE("disposition policy") {
  Verdict v;
  v.choice = Choice::Yes;
  CHECK(decide_disposition(v) == Disposition::Keep);
  v.choice = Choice::Doubt;
  CHECK(decide_disposition(v) == Disposition::Keep);
  v.choice = Choice::No;
  CHECK(decide_disposition(v) == Disposition::Discard);
  v.choice = Choice::NotAvailable;
  CHECK(decide_disposition(v) == Disposition::Unavailable);
  v.choice = Choice::ParseFailed;  // kept for humans
  CHECK(decide_disposition(v) == Disposition::Keep);
}

TEST_CASE("output template round trip on the canonical examples") {
  // Format (choice, confidence, explanation) per the output template, then
  // parse back.
  struct Example {
    Choice choice;
    int confidence;
    const char* explanation;
  } examples[] = {
      {Choice::Yes, 94, "The document explains how to test context-awareness software testing."},
      {Choice::Doubt, 91,
       "The document regards model-based testing to support the generation of "
       "context-awareness test cases."},
      {Choice::No, 82,
       "The document explains how to use formal methods to test software systems."},
  };
  for (const auto& e : examples) {
    std::string rendered = "*" + to_string(e.choice) + "*; Confidence = " +
                           std::to_string(e.confidence) + "%; " + e.explanation;
    auto v = parse_response(rendered);
    CHECK(v.choice == e.choice);
    REQUIRE(v.confidence.has_value());
    CHECK(*v.confidence == e.confidence);
    CHECK(v.explanation == e.explanation);
  }
}

TEST_CASE("choice string round trip") {
  for (Choice c : {Choice::Yes, Choice::No, Choice::Doubt, Choice::NotAvailable,
                   Choice::ParseFailed}) {
    CHECK(choice_from_string(to_string(c)) == c);
  }
}

TEST_SUITE_END();
