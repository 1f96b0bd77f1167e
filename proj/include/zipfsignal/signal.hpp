#pragma once

#include <map>
#include <string>

#include "zipfsignal/corpus.hpp"
#include "zipfsignal/lingproc.hpp"
#include "zipfsignal/powerlaw.hpp"
#include "zipfsignal/series.hpp"

namespace zipfsignal::signal {

// Counts phrases of the requested kind for one article. This is the single
// dispatch point all pipelines go through: the verb/noun/LOP extractions and
// both method-control baselines differ only here.
lingproc::PhraseCounts count_phrases(const corpus::Article& article,
                                     lingproc::PhraseKind kind,
                                     const lingproc::ExclusionList& excl,
                                     const lingproc::PronounList& pronouns);

// Merged per-week counts for the binned articles. Weeks are processed in
// parallel (up to `jobs` threads); merging is commutative count addition,
// so the result is schedule-independent.
std::map<WeekId, lingproc::PhraseCounts> weekly_counts(
    const corpus::ArticleStore& store,
    const std::map<WeekId, std::vector<std::string>>& bins,
    lingproc::PhraseKind kind, const lingproc::ExclusionList& excl,
    const lingproc::PronounList& pronouns, int jobs = 1);

// Per-week power-law exponents. Weeks with fewer than 3 distinct keys are
// missing rather than errors.
WeeklySeries alpha_series(const std::map<WeekId, lingproc::PhraseCounts>& bins,
                          const powerlaw::FitOptions& options,
                          std::string label = "alpha", int jobs = 1);

// value_i = s_i - corpus_alpha; missing propagates.
WeeklySeries deviation_series(const WeeklySeries& s, double corpus_alpha);

enum class WindowMean { kGeometric, kArithmetic };

// The two-offset 8-week window: the average of the i-3..i+4 and i-4..i+3
// window means. Weeks lacking the full i-4..i+4 neighborhood, or whose
// neighborhood has a missing value, are missing in the output. With
// kGeometric, a non-positive value inside an evaluated window raises
// NumericError naming the week.
WeeklySeries windowed_two_offset_mean(const WeeklySeries& s, WindowMean mean,
                                      std::string label = "");

// The published model: two-offset 8-week geometric mean of weekly alphas.
WeeklySeries windowed_model(const WeeklySeries& s);

// Causal variant for live use: trailing 8-week geometric mean of
// a_{i-7}..a_i. Not used by the published figures.
WeeklySeries windowed_model_causal(const WeeklySeries& s);

// Method-control baselines: arbitrary re-segmentations of the body text.
// Splits on lowercase 'e', drops empty fragments, counts fragments.
lingproc::PhraseCounts baseline_e_delimited(std::string_view body);
// Keeps tokens at 1-based positions 3, 6, 9, ... and counts their
// lowercased surfaces.
lingproc::PhraseCounts baseline_third_word(std::string_view body);

}  // namespace zipfsignal::signal
