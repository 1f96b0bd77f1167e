#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zipfsignal/phrase_counts.hpp"
#include "zipfsignal/series.hpp"

namespace zipfsignal::divergence {

enum class Valency { kPositive, kNegative, kNeutral };

const char* valency_name(Valency v);
Valency parse_valency(std::string_view name);

// Human ratings of lemma-object pairs. When a second rater column is
// present, the published ratings are restricted to items both raters agree
// on; rater_agreement() reports how often that happened.
struct ValencyLexicon {
  std::map<std::string, Valency> ratings;                  // rater 1
  std::optional<std::map<std::string, Valency>> second_rater;

  // CSV columns: lop,rating[,rating2]; rating in {positive,negative,neutral}.
  // The lop column may join the pair with a space or with the canonical
  // separator. Throws DataError with the line number on malformed rows and
  // on duplicate LOPs.
  static ValencyLexicon load_csv(const std::filesystem::path& path);

  // The ratings used for analysis: items both raters agree on, or all of
  // rater 1 when there is no second rater.
  std::map<std::string, Valency> agreed() const;
};

struct RaterAgreement {
  double agree_fraction = 0.0;
  std::map<Valency, double> per_category_shares;  // over agreed items
};

// Requires both rater maps with identical key sets.
RaterAgreement rater_agreement(const ValencyLexicon& lexicon);

// A smoothed probability distribution over the LOPs of one valency
// category. Supports must match across distributions being compared.
struct CategoryDistribution {
  Valency category = Valency::kNeutral;
  std::vector<std::string> support;  // fixed, sorted key set
  std::vector<double> probs;         // parallel to support; all > 0, sum 1
};

// The fixed support for a category: every agreed LOP of that category that
// appears anywhere in the reference (whole-corpus) counts.
std::vector<std::string> category_support(const lingproc::PhraseCounts& corpus_counts,
                                          const ValencyLexicon& lexicon,
                                          Valency category);

// prob(k) = (count(k) + epsilon) / (total_in_scope + epsilon * |support|).
// Throws NumericError on empty support or epsilon <= 0.
CategoryDistribution category_distribution(const lingproc::PhraseCounts& counts,
                                           Valency category,
                                           const std::vector<std::string>& support,
                                           double epsilon);

// J-divergence: D(P||Q) + D(Q||P), in nats. Throws DataError on support
// mismatch.
double symmetric_kl(const CategoryDistribution& p, const CategoryDistribution& q);

// Per-week symmetric K-L divergence between that week's distribution and
// the whole-corpus distribution, before any windowing.
WeeklySeries kl_series_raw(const std::map<WeekId, lingproc::PhraseCounts>& weekly,
                           const ValencyLexicon& lexicon, Valency category,
                           double epsilon, int jobs = 1);

// kl_series_raw smoothed with the two-offset 8-week arithmetic mean
// (the same window geometry the alpha model uses).
WeeklySeries kl_series(const std::map<WeekId, lingproc::PhraseCounts>& weekly,
                       const ValencyLexicon& lexicon, Valency category,
                       double epsilon, int jobs = 1);

struct WeekInterval {
  WeekId first;
  WeekId last;  // inclusive

  std::int64_t length() const { return week_distance(first, last) + 1; }
};

// Maximal runs of >= min_len consecutive weeks where pos - neg >= margin
// (both values defined). Returned disjoint and in chronological order.
std::vector<WeekInterval> detect_breakout_regions(const WeeklySeries& pos,
                                                  const WeeklySeries& neg,
                                                  double margin, int min_len);

}  // namespace zipfsignal::divergence
