#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace greyscreen {

enum class Vote { Yes, No, Doubt, NotAvailable };
enum class ConsensusCategory { Include, Doubt, No };

std::string to_string(Vote v);
std::string to_string(ConsensusCategory c);
Vote vote_from_string(std::string_view s);  // throws InvalidInputError

struct VoteRecord {
  std::string item_id;
  std::string rater_id;
  Vote vote = Vote::No;
};

/// Three-rater consensus. Order-insensitive:
///   three Yes, or two Yes + one Doubt          -> Include
///   three Doubt, or two Doubt + anything else  -> Doubt
///   every other combination                    -> No
/// Exactly three votes over {Yes, No, Doubt} are required.
ConsensusCategory aggregate_votes(const std::vector<Vote>& votes);

/// Positive percent agreement of `test` against `reference` for one
/// category: matches / reference-positives. Directional. Returns nullopt
/// when the reference contains no item of that category.
std::optional<double> ppa(std::span<const int> reference, std::span<const int> test, int category);
std::optional<double> ppa(const std::vector<Vote>& reference, const std::vector<Vote>& test, Vote category);

/// Cohen's kappa over two aligned label sequences. Labels are opaque;
/// the category universe is the union of labels observed on either side.
/// Total observed agreement yields exactly 1.
double cohen_kappa(std::span<const int> a, std::span<const int> b);
double cohen_kappa(const std::vector<Vote>& a, const std::vector<Vote>& b);

/// Fleiss' kappa. `counts` holds one row per item, one column per
/// category; every row must sum to `raters_per_item` (>= 2). Unanimous
/// agreement on every item yields exactly 1.
double fleiss_kappa(const std::vector<std::vector<int>>& counts, int raters_per_item);

/// Inverse standard-normal CDF (rational approximation, |error| < 1e-9
/// over (0,1)).
double normal_quantile(double p);

struct SamplePlan {
  long long population_n = 0;
  double confidence = 0.95;
  double margin = 0.05;
  double proportion = 0.5;
  double z = 0.0;
  long long required_n = 0;
  std::uint64_t seed = 0;
};

/// Finite-population sample size: n0 = z^2 p (1-p) / e^2 corrected by
/// n = ceil(n0 / (1 + (n0 - 1) / N)). z is the two-sided normal quantile
/// of the confidence level.
long long sample_size(long long population_n, double confidence, double margin, double proportion);

SamplePlan make_sample_plan(long long population_n, double confidence, double margin,
                            double proportion, std::uint64_t seed);

/// Uniform sample of n items without replacement; deterministic for a
/// given seed. n == items.size() yields a full permutation.
std::vector<std::string> draw_sample(const std::vector<std::string>& items, std::size_t n,
                                     std::uint64_t seed);

struct AgreementReport {
  // category label -> PPA fraction; nullopt when the reference side has
  // no item of that category. Direction: reference = human consensus,
  // test = LLM.
  std::map<std::string, std::optional<double>> ppa_by_category;
  // category label -> {agreeing items, reference items}
  std::map<std::string, std::pair<long long, long long>> counts;
  double cohen_kappa = 0.0;
  std::optional<double> fleiss_kappa;  // humans only; unset without 3-rater data
  long long n_items = 0;
  long long n_excluded_na = 0;
};

}  // namespace greyscreen
