#include "zipfsignal/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "parallel.hpp"
#include "zipfsignal/csv.hpp"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/signal.hpp"

namespace zipfsignal::divergence {

const char* valency_name(Valency v) {
  switch (v) {
    case Valency::kPositive: return "positive";
    case Valency::kNegative: return "negative";
    case Valency::kNeutral: return "neutral";
  }
  return "?";
}

Valency parse_valency(std::string_view name) {
  if (name == "positive") return Valency::kPositive;
  if (name == "negative") return Valency::kNegative;
  if (name == "neutral") return Valency::kNeutral;
  throw DataError("unknown valency rating: '" + std::string(name) +
                  "' (expected positive|negative|neutral)");
}

namespace {

// LOP keys in lexicon files may use a space between verb and object; the
// canonical in-memory form uses the reserved separator.
std::string canonical_lop(const std::string& raw) {
  std::string key = raw;
  if (key.find(lingproc::kLopSeparator) == std::string::npos) {
    const auto space = key.find(' ');
    if (space != std::string::npos) key[space] = lingproc::kLopSeparator;
  }
  return key;
}

}  // namespace

ValencyLexicon ValencyLexicon::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon: " + path.string());
  ValencyLexicon lexicon;
  bool has_second = false;
  csvio::Reader reader(in);
  std::vector<std::string> row;
  bool first = true;
  while (reader.next(row)) {
    if (first && !row.empty() && row[0] == "lop") {
      first = false;
      continue;
    }
    first = false;
    if (row.size() != 2 && row.size() != 3) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": expected lop,rating[,rating2]");
    }
    const std::string key = canonical_lop(row[0]);
    if (key.empty()) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": empty lop");
    }
    if (lexicon.ratings.count(key)) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": duplicate lop '" + row[0] + "'");
    }
    Valency rating;
    try {
      rating = parse_valency(row[1]);
    } catch (const DataError& e) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": " + e.what());
    }
    lexicon.ratings.emplace(key, rating);
    if (row.size() == 3) {
      if (!has_second) {
        lexicon.second_rater.emplace();
        has_second = true;
      }
      try {
        lexicon.second_rater->emplace(key, parse_valency(row[2]));
      } catch (const DataError& e) {
        throw DataError(path.string() + " line " +
                        std::to_string(reader.line_no()) + ": " + e.what());
      }
    } else if (has_second) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": missing rating2 (present on earlier rows)");
    }
  }
  return lexicon;
}

std::map<std::string, Valency> ValencyLexicon::agreed() const {
  if (!second_rater) return ratings;
  std::map<std::string, Valency> out;
  for (const auto& [key, rating] : ratings) {
    const auto other = second_rater->find(key);
    if (other != second_rater->end() && other->second == rating) {
      out.emplace(key, rating);
    }
  }
  return out;
}

RaterAgreement rater_agreement(const ValencyLexicon& lexicon) {
  if (!lexicon.second_rater) {
    throw DataError("rater_agreement requires two rater columns");
  }
  const auto& r1 = lexicon.ratings;
  const auto& r2 = *lexicon.second_rater;
  if (r1.size() != r2.size()) {
    throw DataError("rater_agreement: rater key sets differ in size");
  }
  RaterAgreement out;
  std::map<Valency, std::size_t> agreed_by_category;
  std::size_t agreed = 0;
  for (const auto& [key, rating] : r1) {
    const auto other = r2.find(key);
    if (other == r2.end()) {
      throw DataError("rater_agreement: key missing from second rater: " + key);
    }
    if (other->second == rating) {
      ++agreed;
      ++agreed_by_category[rating];
    }
  }
  out.agree_fraction =
      r1.empty() ? 0.0 : static_cast<double>(agreed) / static_cast<double>(r1.size());
  for (const Valency v : {Valency::kPositive, Valency::kNegative, Valency::kNeutral}) {
    out.per_category_shares[v] =
        agreed == 0 ? 0.0
                    : static_cast<double>(agreed_by_category[v]) /
                          static_cast<double>(agreed);
  }
  return out;
}

std::vector<std::string> category_support(const lingproc::PhraseCounts& corpus_counts,
                                          const ValencyLexicon& lexicon,
                                          Valency category) {
  const auto ratings = lexicon.agreed();
  std::vector<std::string> support;
  for (const auto& [key, n] : corpus_counts.counts) {
    const auto it = ratings.find(key);
    if (it != ratings.end() && it->second == category) support.push_back(key);
  }
  return support;  // map iteration yields sorted keys
}

CategoryDistribution category_distribution(const lingproc::PhraseCounts& counts,
                                           Valency category,
                                           const std::vector<std::string>& support,
                                           double epsilon) {
  if (support.empty()) {
    throw NumericError("category_distribution: empty support for category " +
                       std::string(valency_name(category)));
  }
  if (!(epsilon > 0.0)) {
    throw NumericError("category_distribution: epsilon must be > 0");
  }
  CategoryDistribution dist;
  dist.category = category;
  dist.support = support;
  dist.probs.resize(support.size());

  double total_in_scope = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto it = counts.counts.find(support[i]);
    const double n = it == counts.counts.end() ? 0.0 : static_cast<double>(it->second);
    dist.probs[i] = n;
    total_in_scope += n;
  }
  const double denom = total_in_scope + epsilon * static_cast<double>(support.size());
  for (double& p : dist.probs) p = (p + epsilon) / denom;
  return dist;
}

double symmetric_kl(const CategoryDistribution& p, const CategoryDistribution& q) {
  if (p.support != q.support) {
    throw DataError("symmetric_kl: distributions have different supports");
  }
  double d_pq = 0.0, d_qp = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    const double log_ratio = std::log(p.probs[i] / q.probs[i]);
    d_pq += p.probs[i] * log_ratio;
    d_qp -= q.probs[i] * log_ratio;
  }
  return d_pq + d_qp;
}

WeeklySeries kl_series_raw(const std::map<WeekId, lingproc::PhraseCounts>& weekly,
                           const ValencyLexicon& lexicon, Valency category,
                           double epsilon, int jobs) {
  lingproc::PhraseCounts corpus;
  corpus.kind = lingproc::PhraseKind::kLemmaObjectPair;
  for (const auto& [week, counts] : weekly) corpus.merge(counts);

  const std::vector<std::string> support =
      category_support(corpus, lexicon, category);
  const CategoryDistribution corpus_dist =
      category_distribution(corpus, category, support, epsilon);

  std::vector<WeekId> weeks;
  std::vector<const lingproc::PhraseCounts*> counts;
  for (const auto& [week, c] : weekly) {
    weeks.push_back(week);
    counts.push_back(&c);
  }
  std::vector<double> values(weeks.size());
  zipfsignal::detail::parallel_for(weeks.size(), jobs, [&](std::size_t i) {
    const CategoryDistribution week_dist =
        category_distribution(*counts[i], category, support, epsilon);
    values[i] = symmetric_kl(week_dist, corpus_dist);
  });

  WeeklySeries out;
  out.label = std::string("kl_") + valency_name(category);
  for (std::size_t i = 0; i < weeks.size(); ++i) out.set(weeks[i], values[i]);
  return out;
}

WeeklySeries kl_series(const std::map<WeekId, lingproc::PhraseCounts>& weekly,
                       const ValencyLexicon& lexicon, Valency category,
                       double epsilon, int jobs) {
  const WeeklySeries raw = kl_series_raw(weekly, lexicon, category, epsilon, jobs);
  return signal::windowed_two_offset_mean(raw, signal::WindowMean::kArithmetic,
                                          raw.label);
}

std::vector<WeekInterval> detect_breakout_regions(const WeeklySeries& pos,
                                                  const WeeklySeries& neg,
                                                  double margin, int min_len) {
  if (min_len < 1) throw ConfigError("detect_breakout_regions: min_len must be >= 1");
  std::vector<WeekInterval> regions;
  std::optional<WeekId> run_start;
  std::optional<WeekId> run_end;

  const auto flush = [&] {
    if (run_start && week_distance(*run_start, *run_end) + 1 >= min_len) {
      regions.push_back(WeekInterval{*run_start, *run_end});
    }
    run_start.reset();
    run_end.reset();
  };

  for (const auto& [week, pos_value] : pos.entries) {
    const std::optional<double> neg_value = neg.at(week);
    const bool above =
        pos_value && neg_value && (*pos_value - *neg_value >= margin);
    const bool adjacent = run_end && run_end->next() == week;
    if (above) {
      if (!run_start || !adjacent) {
        flush();
        run_start = week;
      }
      run_end = week;
    } else if (run_start) {
      flush();
    }
  }
  flush();
  return regions;
}

}  // namespace zipfsignal::divergence
