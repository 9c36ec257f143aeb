#include "greyscreen/terms.hpp"

#include <set>

#include "greyscreen/error.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

std::string to_string(QueryStrategy s) {
  return s == QueryStrategy::PairwiseAnd ? "pairwise_and" : "or_merged";
}

QueryStrategy strategy_from_string(std::string_view s) {
  std::string t = to_lower(trim(s));
  if (t == "pairwise_and" || t == "pairwise" || t == "and") return QueryStrategy::PairwiseAnd;
  if (t == "or_merged" || t == "or" || t == "merged") return QueryStrategy::OrMerged;
  throw InvalidInputError("unrecognized query strategy: '" + std::string(s) + "'");
}

namespace {

void validate_list(const std::vector<std::string>& terms, const char* name) {
  if (terms.empty()) {
    throw InvalidInputError(std::string(name) + " term list is empty");
  }
  std::set<std::string> seen;
  for (const auto& term : terms) {
    if (trim(term).empty()) {
      throw InvalidInputError(std::string(name) + " term list contains a blank phrase");
    }
    if (term.find('"') != std::string::npos) {
      throw InvalidInputError(std::string(name) + " term '" + term +
                              "' contains a quote character");
    }
    if (!seen.insert(to_lower(term)).second) {
      throw InvalidInputError(std::string(name) + " term '" + term + "' is duplicated");
    }
  }
}

std::string intext(const std::string& phrase) {
  return "intext:\"" + phrase + "\"";
}

}  // namespace

void TermSet::validate() const {
  validate_list(population, "population");
  validate_list(intervention, "intervention");
}

std::vector<QuerySpec> build_queries(const TermSet& terms, QueryStrategy strategy) {
  terms.validate();
  std::vector<QuerySpec> specs;

  if (strategy == QueryStrategy::OrMerged) {
    specs.reserve(terms.intervention.size());
    for (std::size_t i = 0; i < terms.intervention.size(); ++i) {
      const std::string& iv = terms.intervention[i];
      std::string rendered = "(";
      for (std::size_t p = 0; p < terms.population.size(); ++p) {
        if (p) rendered += " OR ";
        rendered += intext(terms.population[p]);
      }
      rendered += ") AND " + intext(iv) + " AND intext:\"software\" filetype:pdf";
      specs.push_back({strategy, iv, std::move(rendered),
                       "q" + std::to_string(i + 1) + "-" + slugify(iv)});
    }
    return specs;
  }

  specs.reserve(terms.population.size() * terms.intervention.size());
  std::size_t ordinal = 0;
  for (const auto& pop : terms.population) {
    for (const auto& iv : terms.intervention) {
      std::string rendered =
          intext(pop) + " AND " + intext(iv) + " AND intext:\"software\" filetype:pdf";
      specs.push_back({strategy, iv, std::move(rendered),
                       "q" + std::to_string(++ordinal) + "-" + slugify(pop) + "-" + slugify(iv)});
    }
  }
  return specs;
}

}  // namespace greyscreen
