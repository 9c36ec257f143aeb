#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace greyscreen {

enum class QueryStrategy { PairwiseAnd, OrMerged };

std::string to_string(QueryStrategy s);
QueryStrategy strategy_from_string(std::string_view s);  // throws InvalidInputError

/// Protocol vocabularies driving query construction.
struct TermSet {
  std::vector<std::string> population;
  std::vector<std::string> intervention;

  /// Both lists non-empty, no blank phrases, no case-insensitive
  /// duplicates, no embedded quotes. Throws InvalidInputError.
  void validate() const;
};

struct QuerySpec {
  QueryStrategy strategy = QueryStrategy::OrMerged;
  std::string intervention_term;
  std::string rendered;
  std::string id;
};

/// Renders Boolean search queries from the term sets.
///
/// OrMerged: one query per intervention term,
///   (intext:"p1" OR ... OR intext:"pn") AND intext:"<i>" AND intext:"software" filetype:pdf
/// PairwiseAnd: one query per (population, intervention) pair,
///   intext:"<p>" AND intext:"<i>" AND intext:"software" filetype:pdf
///
/// Pure: identical inputs yield byte-identical rendered strings.
/// Ordering follows the input lists, population-major for PairwiseAnd.
std::vector<QuerySpec> build_queries(const TermSet& terms, QueryStrategy strategy);

}  // namespace greyscreen
