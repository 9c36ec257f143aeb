#include "greyscreen/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "greyscreen/error.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

std::string to_string(Vote v) {
  switch (v) {
    case Vote::Yes: return "YES";
    case Vote::No: return "NO";
    case Vote::Doubt: return "DOUBT";
    case Vote::NotAvailable: return "NOT AVAILABLE";
  }
  return "?";
}

std::string to_string(ConsensusCategory c) {
  switch (c) {
    case ConsensusCategory::Include: return "INCLUDE";
    case ConsensusCategory::Doubt: return "DOUBT";
    case ConsensusCategory::No: return "NO";
  }
  return "?";
}

Vote vote_from_string(std::string_view s) {
  std::string t = to_lower(trim(s));
  if (t == "yes" || t == "y" || t == "include" || t == "included") return Vote::Yes;
  if (t == "no" || t == "n") return Vote::No;
  if (t == "doubt" || t == "d") return Vote::Doubt;
  if (t == "not available" || t == "na" || t == "n/a" || t == "not_available") {
    return Vote::NotAvailable;
  }
  throw InvalidInputError("unrecognized vote: '" + std::string(s) + "'");
}

ConsensusCategory aggregate_votes(const std::vector<Vote>& votes) {
  if (votes.size() != 3) {
    throw InvalidInputError("consensus requires exactly 3 votes, got " +
                            std::to_string(votes.size()));
  }
  int yes = 0, no = 0, doubt = 0;
  for (Vote v : votes) {
    switch (v) {
      case Vote::Yes: ++yes; break;
      case Vote::No: ++no; break;
      case Vote::Doubt: ++doubt; break;
      case Vote::NotAvailable:
        throw InvalidInputError("NOT AVAILABLE votes must be resolved before aggregation");
    }
  }
  if (yes == 3 || (yes == 2 && doubt == 1)) return ConsensusCategory::Include;
  if (doubt == 3 || doubt == 2) return ConsensusCategory::Doubt;
  return ConsensusCategory::No;
}

std::optional<double> ppa(std::span<const int> reference, std::span<const int> test, int category) {
  if (reference.size() != test.size()) {
    throw InvalidInputError("ppa: sequences differ in length");
  }
  long long ref_positives = 0, matches = 0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (reference[i] != category) continue;
    ++ref_positives;
    if (test[i] == category) ++matches;
  }
  if (ref_positives == 0) return std::nullopt;
  return static_cast<double>(matches) / static_cast<double>(ref_positives);
}

namespace {

std::vector<int> to_labels(const std::vector<Vote>& votes) {
  std::vector<int> out;
  out.reserve(votes.size());
  for (Vote v : votes) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

std::optional<double> ppa(const std::vector<Vote>& reference, const std::vector<Vote>& test,
                          Vote category) {
  auto a = to_labels(reference);
  auto b = to_labels(test);
  return ppa(std::span<const int>(a), std::span<const int>(b), static_cast<int>(category));
}

double cohen_kappa(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InvalidInputError("cohen_kappa: sequences differ in length");
  if (a.empty()) throw InvalidInputError("cohen_kappa: empty sequences");

  std::map<int, double> freq_a, freq_b;
  long long agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    freq_a[a[i]] += 1.0;
    freq_b[b[i]] += 1.0;
    if (a[i] == b[i]) ++agree;
  }
  double n = static_cast<double>(a.size());
  double p_o = static_cast<double>(agree) / n;
  double p_e = 0.0;
  for (const auto& [label, count] : freq_a) {
    auto it = freq_b.find(label);
    if (it == freq_b.end()) continue;  // absent on one side contributes zero
    p_e += (count / n) * (it->second / n);
  }
  if (p_o >= 1.0) return 1.0;  // total agreement, regardless of p_e
  return (p_o - p_e) / (1.0 - p_e);
}

double cohen_kappa(const std::vector<Vote>& a, const std::vector<Vote>& b) {
  auto la = to_labels(a);
  auto lb = to_labels(b);
  return cohen_kappa(std::span<const int>(la), std::span<const int>(lb));
}

double fleiss_kappa(const std::vector<std::vector<int>>& counts, int raters_per_item) {
  if (raters_per_item < 2) throw InvalidInputError("fleiss_kappa: need at least 2 raters");
  if (counts.empty()) throw InvalidInputError("fleiss_kappa: no items");
  std::size_t categories = counts.front().size();
  double n = raters_per_item;
  double items = static_cast<double>(counts.size());

  std::vector<double> category_totals(categories, 0.0);
  double p_bar = 0.0;
  for (const auto& row : counts) {
    if (row.size() != categories) {
      throw InvalidInputError("fleiss_kappa: ragged count matrix");
    }
    long long row_sum = 0;
    double sq = 0.0;
    for (std::size_t c = 0; c < categories; ++c) {
      if (row[c] < 0) throw InvalidInputError("fleiss_kappa: negative count");
      row_sum += row[c];
      sq += static_cast<double>(row[c]) * row[c];
      category_totals[c] += row[c];
    }
    if (row_sum != raters_per_item) {
      throw InvalidInputError("fleiss_kappa: row sum " + std::to_string(row_sum) +
                              " != raters per item " + std::to_string(raters_per_item));
    }
    p_bar += (sq - n) / (n * (n - 1.0));
  }
  p_bar /= items;

  double p_e = 0.0;
  for (double total : category_totals) {
    double p_c = total / (items * n);
    p_e += p_c * p_c;
  }
  if (p_bar >= 1.0) return 1.0;  // unanimous everywhere
  return (p_bar - p_e) / (1.0 - p_e);
}

double normal_quantile(double p) {
  // Wichura's algorithm AS 241 (PPND16).
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidInputError("normal_quantile: p must lie in (0,1)");
  }
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
               1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
               5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -value : value;
}

long long sample_size(long long population_n, double confidence, double margin,
                      double proportion) {
  if (population_n < 1) throw InvalidInputError("sample_size: population must be positive");
  if (!(margin > 0.0 && margin < 1.0)) throw InvalidInputError("sample_size: margin out of (0,1)");
  if (!(proportion > 0.0 && proportion < 1.0)) {
    throw InvalidInputError("sample_size: proportion out of (0,1)");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw InvalidInputError("sample_size: confidence out of (0,1)");
  }
  const double z = normal_quantile(0.5 + confidence / 2.0);
  const double n0 = z * z * proportion * (1.0 - proportion) / (margin * margin);
  const double corrected = n0 / (1.0 + (n0 - 1.0) / static_cast<double>(population_n));
  return static_cast<long long>(std::ceil(corrected));
}

SamplePlan make_sample_plan(long long population_n, double confidence, double margin,
                            double proportion, std::uint64_t seed) {
  SamplePlan plan;
  plan.population_n = population_n;
  plan.confidence = confidence;
  plan.margin = margin;
  plan.proportion = proportion;
  plan.z = normal_quantile(0.5 + confidence / 2.0);
  plan.required_n = sample_size(population_n, confidence, margin, proportion);
  plan.seed = seed;
  return plan;
}

namespace {

// Unbiased uniform draw in [0, bound) via rejection; deterministic with a
// given engine state on any platform (mt19937_64 output is standardized).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t bucket = max / bound;
  const std::uint64_t limit = bucket * bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<std::string> draw_sample(const std::vector<std::string>& items, std::size_t n,
                                     std::uint64_t seed) {
  if (n > items.size()) {
    throw InvalidInputError("draw_sample: requested " + std::to_string(n) + " of " +
                            std::to_string(items.size()) + " items");
  }
  std::vector<std::string> pool = items;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

}  // namespace greyscreen
