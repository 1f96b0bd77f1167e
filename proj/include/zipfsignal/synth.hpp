#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "zipfsignal/date.hpp"

namespace zipfsignal::synth {

// One week of the generator schedule: the target verb-distribution exponent
// and the valency mix of emitted lemma-object pairs (sums to 1).
struct WeekSpec {
  double alpha = 0.8;
  double pos = 0.14;
  double neg = 0.27;
  double neu = 0.59;
};

struct GeneratorConfig {
  std::vector<WeekSpec> weeks;
  Date start{2006, 1, 2};  // articles are dated within ISO weeks from here
  int articles_per_week = 60;
  int sentences_per_article = 40;
  int verb_vocab = 1200;
  // Measurement verbs are written as heavily homographic tokens: the lemma
  // column follows the scheduled Zipf distribution while the surface column
  // is drawn from this stationary inflection pool, independent of the
  // lemma. The convergence signal therefore lives in the lemma layer that
  // the verb pipeline reads, and surface-level re-segmentations (the
  // e-delimited and third-word controls) see a stationary text stream.
  int verb_surface_vocab = 3000;
  int noun_vocab = 600;
  int filler_vocab = 2500;
  int pos_pairs = 40;
  int neg_pairs = 80;
  int neu_pairs = 170;
  // Fraction of sentences that carry a rated lemma-object pair instead of a
  // verb drawn from the scheduled Zipf distribution.
  double valency_fraction = 0.5;
  // Within-category pair draws are Zipf(base_concentration). In weeks whose
  // scheduled positive share sits more than 10% of the schedule's range
  // above its minimum, the bubble regime is active: positive draws come from
  // a narrow distribution (Zipf(peak_concentration) over reversed ranks)
  // with probability bubble_mix_cap, modelling convergence on a small set of
  // previously rare positive phrasings.
  double base_concentration = 1.0;
  double peak_concentration = 2.0;
  double bubble_mix_cap = 0.6;
  // Weekly jitter of the filler/subject-noun Zipf exponents, uniform in
  // +-texture_jitter around 1 and independent of the schedule. Gives the
  // non-verb text channels week-to-week variation of their own, the way
  // topical churn does in real news, so arbitrary re-segmentations of the
  // text do not just mirror the verb signal.
  double texture_jitter = 0.45;
  double index_base = 10000.0;
  double index_noise = 0.05;  // multiplicative, uniform in +-noise
  std::uint64_t seed = 1;
};

struct GeneratorOutput {
  std::filesystem::path raw_dir;
  std::filesystem::path manifest_csv;      // filename,source,url,date
  std::filesystem::path ground_truth_csv;  // week,true_alpha,pos,neg,neu
  std::filesystem::path lexicon_csv;       // lop,rating
  std::filesystem::path index_csv;         // date,close
  int article_count = 0;
};

// Validates the schedule (alpha > 0, mix components >= 0 summing to 1) and
// writes a pre-tagged corpus plus its ground truth under out_dir.
// Deterministic: the same config yields byte-identical output.
GeneratorOutput generate(const GeneratorConfig& config,
                         const std::filesystem::path& out_dir);

// Schedule I/O. alpha CSV: "week,alpha"; mix CSV: "week,pos,neg,neu"; week
// is the 1-based week number and both files must cover 1..N exactly.
std::vector<WeekSpec> load_schedule(const std::filesystem::path& alpha_csv,
                                    const std::filesystem::path& mix_csv);
void write_schedule(const std::vector<WeekSpec>& weeks,
                    const std::filesystem::path& alpha_csv,
                    const std::filesystem::path& mix_csv);

}  // namespace zipfsignal::synth
