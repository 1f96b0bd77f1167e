#include "zipfsignal/signal.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "parallel.hpp"
#include "zipfsignal/errors.hpp"

namespace zipfsignal::signal {

lingproc::PhraseCounts count_phrases(const corpus::Article& article,
                                     lingproc::PhraseKind kind,
                                     const lingproc::ExclusionList& excl,
                                     const lingproc::PronounList& pronouns) {
  using lingproc::PhraseKind;
  switch (kind) {
    case PhraseKind::kVerbLemma:
      return lingproc::extract_verb_lemmas(
          lingproc::document_from_article(article, pronouns), excl);
    case PhraseKind::kNounPhrase:
      return lingproc::extract_noun_phrases(
          lingproc::document_from_article(article, pronouns));
    case PhraseKind::kLemmaObjectPair:
      return lingproc::extract_lops(
          lingproc::document_from_article(article, pronouns), excl);
    case PhraseKind::kBaselineEDelimited:
      return baseline_e_delimited(lingproc::plain_text_of(article));
    case PhraseKind::kBaselineThirdWord:
      return baseline_third_word(lingproc::plain_text_of(article));
  }
  throw ConfigError("unknown phrase kind");
}

std::map<WeekId, lingproc::PhraseCounts> weekly_counts(
    const corpus::ArticleStore& store,
    const std::map<WeekId, std::vector<std::string>>& bins,
    lingproc::PhraseKind kind, const lingproc::ExclusionList& excl,
    const lingproc::PronounList& pronouns, int jobs) {
  std::vector<const std::vector<std::string>*> id_lists;
  std::vector<WeekId> weeks;
  for (const auto& [week, ids] : bins) {
    weeks.push_back(week);
    id_lists.push_back(&ids);
  }
  std::vector<lingproc::PhraseCounts> merged(weeks.size());
  detail::parallel_for(weeks.size(), jobs, [&](std::size_t i) {
    lingproc::PhraseCounts week_counts;
    week_counts.kind = kind;
    for (const std::string& id : *id_lists[i]) {
      const corpus::Article* article = store.find_id(id);
      if (!article) throw DataError("article id not in store: " + id);
      week_counts.merge(count_phrases(*article, kind, excl, pronouns));
    }
    merged[i] = std::move(week_counts);
  });
  std::map<WeekId, lingproc::PhraseCounts> out;
  for (std::size_t i = 0; i < weeks.size(); ++i) {
    out.emplace(weeks[i], std::move(merged[i]));
  }
  return out;
}

WeeklySeries alpha_series(const std::map<WeekId, lingproc::PhraseCounts>& bins,
                          const powerlaw::FitOptions& options, std::string label,
                          int jobs) {
  std::vector<WeekId> weeks;
  std::vector<const lingproc::PhraseCounts*> counts;
  for (const auto& [week, c] : bins) {
    weeks.push_back(week);
    counts.push_back(&c);
  }
  std::vector<std::optional<double>> values(weeks.size());
  detail::parallel_for(weeks.size(), jobs, [&](std::size_t i) {
    if (counts[i]->counts.size() < 3) {
      values[i] = std::nullopt;
      return;
    }
    const auto dist = powerlaw::rank_frequency(*counts[i]);
    values[i] = powerlaw::fit_power_law(dist, options).alpha;
  });
  WeeklySeries series;
  series.label = std::move(label);
  for (std::size_t i = 0; i < weeks.size(); ++i) series.set(weeks[i], values[i]);
  return series;
}

WeeklySeries deviation_series(const WeeklySeries& s, double corpus_alpha) {
  WeeklySeries out;
  out.label = s.label + "_deviation";
  for (const auto& [week, value] : s.entries) {
    out.set(week, value ? std::optional<double>(*value - corpus_alpha)
                        : std::nullopt);
  }
  return out;
}

namespace {

// Mean of 8 consecutive values starting at `begin`.
double window_mean(const std::vector<double>& v, std::size_t begin,
                   WindowMean mean, const std::vector<WeekId>& weeks) {
  if (mean == WindowMean::kArithmetic) {
    double sum = 0.0;
    for (std::size_t k = 0; k < 8; ++k) sum += v[begin + k];
    return sum / 8.0;
  }
  double log_sum = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    if (!(v[begin + k] > 0.0)) {
      throw NumericError("geometric-mean window at week " +
                         weeks[begin + k].to_string() +
                         ": non-positive value " + std::to_string(v[begin + k]));
    }
    log_sum += std::log(v[begin + k]);
  }
  return std::exp(log_sum / 8.0);
}

}  // namespace

WeeklySeries windowed_two_offset_mean(const WeeklySeries& s, WindowMean mean,
                                      std::string label) {
  if (!s.contiguous()) {
    throw DataError("windowed model requires a contiguous week axis");
  }
  std::vector<WeekId> weeks;
  std::vector<std::optional<double>> values;
  for (const auto& [week, value] : s.entries) {
    weeks.push_back(week);
    values.push_back(value);
  }
  WeeklySeries out;
  out.label = label.empty() ? s.label + "_model" : std::move(label);

  const std::size_t n = weeks.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Needs the full i-4..i+4 neighborhood, all defined.
    if (i < 4 || i + 4 >= n) {
      out.set(weeks[i], std::nullopt);
      continue;
    }
    bool complete = true;
    for (std::size_t k = i - 4; k <= i + 4; ++k) {
      if (!values[k]) {
        complete = false;
        break;
      }
    }
    if (!complete) {
      out.set(weeks[i], std::nullopt);
      continue;
    }
    std::vector<double> raw(9);
    for (std::size_t k = 0; k < 9; ++k) raw[k] = *values[i - 4 + k];
    const std::vector<WeekId> local(weeks.begin() + static_cast<std::ptrdiff_t>(i - 4),
                                    weeks.begin() + static_cast<std::ptrdiff_t>(i + 5));
    const double lead = window_mean(raw, 1, mean, local);   // a_{i-3}..a_{i+4}
    const double lag = window_mean(raw, 0, mean, local);    // a_{i-4}..a_{i+3}
    out.set(weeks[i], 0.5 * (lead + lag));
  }
  return out;
}

WeeklySeries windowed_model(const WeeklySeries& s) {
  return windowed_two_offset_mean(s, WindowMean::kGeometric);
}

WeeklySeries windowed_model_causal(const WeeklySeries& s) {
  if (!s.contiguous()) {
    throw DataError("windowed model requires a contiguous week axis");
  }
  std::vector<WeekId> weeks;
  std::vector<std::optional<double>> values;
  for (const auto& [week, value] : s.entries) {
    weeks.push_back(week);
    values.push_back(value);
  }
  WeeklySeries out;
  out.label = s.label + "_model_causal";
  for (std::size_t i = 0; i < weeks.size(); ++i) {
    if (i < 7) {
      out.set(weeks[i], std::nullopt);
      continue;
    }
    bool complete = true;
    double log_sum = 0.0;
    for (std::size_t k = i - 7; k <= i; ++k) {
      if (!values[k]) {
        complete = false;
        break;
      }
      if (!(*values[k] > 0.0)) {
        throw NumericError("geometric-mean window at week " +
                           weeks[k].to_string() + ": non-positive value " +
                           std::to_string(*values[k]));
      }
      log_sum += std::log(*values[k]);
    }
    out.set(weeks[i], complete ? std::optional<double>(std::exp(log_sum / 8.0))
                               : std::nullopt);
  }
  return out;
}

lingproc::PhraseCounts baseline_e_delimited(std::string_view body) {
  lingproc::PhraseCounts counts;
  counts.kind = lingproc::PhraseKind::kBaselineEDelimited;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == 'e') {
      if (i > start) counts.add(body.substr(start, i - start));
      start = i + 1;
    }
  }
  return counts;
}

lingproc::PhraseCounts baseline_third_word(std::string_view body) {
  lingproc::PhraseCounts counts;
  counts.kind = lingproc::PhraseKind::kBaselineThirdWord;
  const std::vector<lingproc::Token> tokens = lingproc::tokenize(body);
  for (std::size_t i = 2; i < tokens.size(); i += 3) {
    std::string lowered = tokens[i].text;
    for (char& ch : lowered) {
      ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    counts.add(lowered);
  }
  return counts;
}

}  // namespace zipfsignal::signal
