#include "zipfsignal/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "zipfsignal/csv.hpp"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/rng.hpp"

namespace zipfsignal::synth {

namespace {

// Pronounceable deterministic word shapes. The vocabulary depends only on
// its size and prefix, never on the run seed, so schedules can be compared
// across seeds.
std::vector<std::string> make_vocabulary(char prefix, int size) {
  static const char* kOnsets[] = {"b",  "c",  "d",  "f",  "g",  "h",  "j",
                                  "k",  "l",  "m",  "n",  "p",  "r",  "s",
                                  "t",  "v",  "w",  "st", "br", "cr", "dr",
                                  "fl", "gr", "pl", "pr", "sl", "tr", "ch",
                                  "sh", "th"};
  static const char* kVowels[] = {"a", "e", "i", "o", "u", "ea", "ee", "ai",
                                  "ou", "oo"};
  static const char* kCodas[] = {"",  "n",  "r",  "t",  "l",  "d",
                                 "m", "nd", "st", "rt", "ck", "mp"};
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(size));
  std::set<std::string> seen;
  for (int i = 0; i < size; ++i) {
    SplitMix64 rng(0x5EEDC0DEULL + static_cast<std::uint64_t>(i) * 7919ULL +
                   static_cast<std::uint64_t>(prefix));
    std::string word(1, prefix);
    for (int attempt = 0;; ++attempt) {
      const int syllables = 1 + static_cast<int>(rng.next_below(2)) + attempt;
      std::string w = word;
      for (int s = 0; s < syllables; ++s) {
        w += kOnsets[rng.next_below(std::size(kOnsets))];
        w += kVowels[rng.next_below(std::size(kVowels))];
        w += kCodas[rng.next_below(std::size(kCodas))];
      }
      if (seen.insert(w).second) {
        words.push_back(w);
        break;
      }
    }
  }
  return words;
}

// Cumulative Zipf weights over 1..n.
std::vector<double> zipf_cumulative(double alpha, int n) {
  std::vector<double> cum(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int r = 1; r <= n; ++r) {
    sum += std::pow(static_cast<double>(r), -alpha);
    cum[static_cast<std::size_t>(r - 1)] = sum;
  }
  return cum;
}

std::size_t draw(const std::vector<double>& cum, SplitMix64& rng) {
  const double u = rng.next_double() * cum.back();
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  return std::min(static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
}

void append_line(std::string& out, const std::string& surface,
                 const std::string& lemma, const char* tag) {
  out += surface;
  out.push_back('\t');
  out += lemma;
  out.push_back('\t');
  out += tag;
  out.push_back('\n');
}

void validate(const GeneratorConfig& config) {
  if (config.weeks.empty()) throw ConfigError("synth: empty schedule");
  for (std::size_t i = 0; i < config.weeks.size(); ++i) {
    const WeekSpec& w = config.weeks[i];
    if (!(w.alpha > 0.0)) {
      throw ConfigError("synth: week " + std::to_string(i + 1) +
                        ": alpha must be > 0");
    }
    if (w.pos < 0 || w.neg < 0 || w.neu < 0 ||
        std::fabs(w.pos + w.neg + w.neu - 1.0) > 1e-5) {
      throw ConfigError("synth: week " + std::to_string(i + 1) +
                        ": mix must be nonnegative and sum to 1");
    }
  }
  if (config.articles_per_week < 1 || config.sentences_per_article < 1 ||
      config.verb_vocab < 10 || config.verb_surface_vocab < 10 || config.noun_vocab < 10 ||
      config.filler_vocab < 10 || config.pos_pairs < 2 || config.neg_pairs < 2 ||
      config.neu_pairs < 2) {
    throw ConfigError("synth: vocabulary and volume parameters too small");
  }
  if (config.valency_fraction < 0.0 || config.valency_fraction > 1.0) {
    throw ConfigError("synth: valency_fraction must be in [0,1]");
  }
}

}  // namespace

GeneratorOutput generate(const GeneratorConfig& config,
                         const std::filesystem::path& out_dir) {
  validate(config);
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  GeneratorOutput out;
  out.raw_dir = out_dir / "raw";
  out.manifest_csv = out_dir / "manifest.csv";
  out.ground_truth_csv = out_dir / "ground_truth.csv";
  out.lexicon_csv = out_dir / "lexicon.csv";
  out.index_csv = out_dir / "index.csv";
  fs::create_directories(out.raw_dir);

  const auto verbs = make_vocabulary('v', config.verb_vocab);
  const auto verb_surfaces = make_vocabulary('s', config.verb_surface_vocab);
  const auto nouns = make_vocabulary('n', config.noun_vocab);
  const auto fillers = make_vocabulary('f', config.filler_vocab);
  const auto pos_verbs = make_vocabulary('g', config.pos_pairs);
  const auto pos_objects = make_vocabulary('h', config.pos_pairs);
  const auto neg_verbs = make_vocabulary('j', config.neg_pairs);
  const auto neg_objects = make_vocabulary('k', config.neg_pairs);
  const auto neu_verbs = make_vocabulary('q', config.neu_pairs);
  const auto neu_objects = make_vocabulary('x', config.neu_pairs);

  // Rated lexicon covering every pair the generator can emit.
  {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"lop", "rating"});
    for (int i = 0; i < config.pos_pairs; ++i) {
      rows.push_back({pos_verbs[static_cast<std::size_t>(i)] + " " +
                          pos_objects[static_cast<std::size_t>(i)],
                      "positive"});
    }
    for (int i = 0; i < config.neg_pairs; ++i) {
      rows.push_back({neg_verbs[static_cast<std::size_t>(i)] + " " +
                          neg_objects[static_cast<std::size_t>(i)],
                      "negative"});
    }
    for (int i = 0; i < config.neu_pairs; ++i) {
      rows.push_back({neu_verbs[static_cast<std::size_t>(i)] + " " +
                          neu_objects[static_cast<std::size_t>(i)],
                      "neutral"});
    }
    csvio::write_file(out.lexicon_csv, rows);
  }

  if (config.texture_jitter < 0.0 || config.texture_jitter > 0.9) {
    throw ConfigError("synth: texture_jitter must be in [0, 0.9]");
  }

  double pos_min = 1.0, pos_max = 0.0;
  for (const WeekSpec& w : config.weeks) {
    pos_min = std::min(pos_min, w.pos);
    pos_max = std::max(pos_max, w.pos);
  }

  // The surface pool is stationary across weeks.
  const std::vector<double> verb_surface_cum =
      zipf_cumulative(1.0, config.verb_surface_vocab);

  SplitMix64 rng(config.seed);
  const WeekId first_week = WeekId::of(config.start);

  std::vector<std::vector<std::string>> manifest_rows;
  manifest_rows.push_back({"filename", "source", "url", "date"});
  std::vector<std::vector<std::string>> truth_rows;
  truth_rows.push_back({"week", "true_alpha", "pos", "neg", "neu"});
  std::vector<std::vector<std::string>> index_rows;
  index_rows.push_back({"date", "close"});
  static const char* kSources[] = {"FT", "NYT", "BBC"};

  char buf[64];
  int article_no = 0;
  WeekId week = first_week;
  for (std::size_t wi = 0; wi < config.weeks.size(); ++wi, week = week.next()) {
    const WeekSpec& spec = config.weeks[wi];
    const std::vector<double> verb_cum =
        zipf_cumulative(spec.alpha, config.verb_vocab);
    // Bubble regime: positive phrasing converges on a different, much
    // narrower set of pairs whenever the scheduled share is meaningfully
    // above its minimum.
    const bool bubble_active =
        pos_max > pos_min && (spec.pos - pos_min) > 0.1 * (pos_max - pos_min);
    const double ramp = bubble_active ? config.bubble_mix_cap : 0.0;
    const std::vector<double> pos_cum =
        zipf_cumulative(config.base_concentration, config.pos_pairs);
    const std::vector<double> pos_bubble_cum =
        zipf_cumulative(config.peak_concentration, config.pos_pairs);
    const std::vector<double> neg_cum =
        zipf_cumulative(config.base_concentration, config.neg_pairs);
    const std::vector<double> neu_cum =
        zipf_cumulative(config.base_concentration, config.neu_pairs);
    const double filler_alpha =
        1.0 + config.texture_jitter * (2.0 * rng.next_double() - 1.0);
    const double noun_alpha =
        1.0 + config.texture_jitter * (2.0 * rng.next_double() - 1.0);
      const std::vector<double> filler_cum =
        zipf_cumulative(filler_alpha, config.filler_vocab);
    const std::vector<double> noun_cum =
        zipf_cumulative(noun_alpha, config.noun_vocab);
    // Sentence length also varies by week, so fixed-stride resegmentations
    // of the text do not lock onto the sentence structure.
    const int filler_base = 2 + static_cast<int>(rng.next_below(3));

    truth_rows.push_back({week.to_string(),
                          (std::snprintf(buf, sizeof(buf), "%.6g", spec.alpha), buf),
                          (std::snprintf(buf, sizeof(buf), "%.6g", spec.pos), buf),
                          (std::snprintf(buf, sizeof(buf), "%.6g", spec.neg), buf),
                          (std::snprintf(buf, sizeof(buf), "%.6g", spec.neu), buf)});

    const double noise = config.index_noise * (2.0 * rng.next_double() - 1.0);
    const double close =
        config.index_base * (spec.alpha / config.weeks.front().alpha) *
        (1.0 + noise);
    std::snprintf(buf, sizeof(buf), "%.2f", close);
    index_rows.push_back({week.monday().plus_days(4).to_string(), buf});

    for (int a = 0; a < config.articles_per_week; ++a, ++article_no) {
      std::string body;
      body.reserve(static_cast<std::size_t>(config.sentences_per_article) * 120);
      // Unique opener so first-50-character dedup keys never collide.
      std::snprintf(buf, sizeof(buf), "doc%06d", article_no);
      append_line(body, buf, buf, "XX");
      append_line(body, ".", ".", "SENT");
      body.push_back('\n');

      for (int s = 0; s < config.sentences_per_article; ++s) {
        const bool valency_sentence = rng.next_double() < config.valency_fraction;
        append_line(body, "the", "the", "DT");
        const std::string& subject = nouns[draw(noun_cum, rng)];
        append_line(body, subject, subject, "NN");
        if (valency_sentence) {
          const double u = rng.next_double();
          const std::string* verb;
          const std::string* object;
          if (u < spec.pos) {
            std::size_t k;
            if (rng.next_double() < ramp) {
              k = static_cast<std::size_t>(config.pos_pairs) - 1 -
                  draw(pos_bubble_cum, rng);
            } else {
              k = draw(pos_cum, rng);
            }
            verb = &pos_verbs[k];
            object = &pos_objects[k];
          } else if (u < spec.pos + spec.neg) {
            const std::size_t k = draw(neg_cum, rng);
            verb = &neg_verbs[k];
            object = &neg_objects[k];
          } else {
            const std::size_t k = draw(neu_cum, rng);
            verb = &neu_verbs[k];
            object = &neu_objects[k];
          }
          append_line(body, *verb, *verb, "VVD");
          append_line(body, *object, *object, "NN");
        } else {
          const std::string& lemma = verbs[draw(verb_cum, rng)];
          const std::string& surface = verb_surfaces[draw(verb_surface_cum, rng)];
          append_line(body, surface, lemma, "VVD");
        }
        const int filler_count = filler_base + static_cast<int>(rng.next_below(5));
        for (int f = 0; f < filler_count; ++f) {
          const std::string& filler = fillers[draw(filler_cum, rng)];
          append_line(body, filler, filler, "JJ");
        }
        append_line(body, ".", ".", "SENT");
        body.push_back('\n');
      }

      std::snprintf(buf, sizeof(buf), "a%06d.vert", article_no);
      const std::string filename = buf;
      std::ofstream file(out.raw_dir / filename, std::ios::trunc);
      if (!file) {
        throw DataError("cannot write " + (out.raw_dir / filename).string());
      }
      file << body;
      if (!file) throw DataError("I/O failure writing article " + filename);

      const Date date =
          week.monday().plus_days(static_cast<std::int64_t>(rng.next_below(7)));
      const char* source = kSources[article_no % 3];
      manifest_rows.push_back({filename, source,
                               std::string("synth://") + source + "/" + filename,
                               date.to_string()});
    }
  }

  csvio::write_file(out.manifest_csv, manifest_rows);
  csvio::write_file(out.ground_truth_csv, truth_rows);
  csvio::write_file(out.index_csv, index_rows);
  out.article_count = article_no;
  return out;
}

std::vector<WeekSpec> load_schedule(const std::filesystem::path& alpha_csv,
                                    const std::filesystem::path& mix_csv) {
  const auto alpha_rows = csvio::read_file(alpha_csv);
  const auto mix_rows = csvio::read_file(mix_csv);

  const auto parse_num = [](const std::string& s, const std::string& where) {
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw ConfigError("schedule: bad number '" + s + "' in " + where);
    }
  };

  std::vector<WeekSpec> weeks;
  std::size_t row_no = 0;
  for (const auto& row : alpha_rows) {
    ++row_no;
    if (row_no == 1 && !row.empty() && row[0] == "week") continue;
    if (row.size() != 2) {
      throw ConfigError("alpha schedule row " + std::to_string(row_no) +
                        ": expected week,alpha");
    }
    const int week_no = static_cast<int>(parse_num(row[0], alpha_csv.string()));
    if (week_no != static_cast<int>(weeks.size()) + 1) {
      throw ConfigError("alpha schedule: weeks must be 1..N in order");
    }
    WeekSpec spec;
    spec.alpha = parse_num(row[1], alpha_csv.string());
    weeks.push_back(spec);
  }
  row_no = 0;
  std::size_t mix_count = 0;
  for (const auto& row : mix_rows) {
    ++row_no;
    if (row_no == 1 && !row.empty() && row[0] == "week") continue;
    if (row.size() != 4) {
      throw ConfigError("mix schedule row " + std::to_string(row_no) +
                        ": expected week,pos,neg,neu");
    }
    const int week_no = static_cast<int>(parse_num(row[0], mix_csv.string()));
    if (week_no < 1 || static_cast<std::size_t>(week_no) > weeks.size()) {
      throw ConfigError("mix schedule: week " + std::to_string(week_no) +
                        " outside the alpha schedule");
    }
    WeekSpec& spec = weeks[static_cast<std::size_t>(week_no - 1)];
    spec.pos = parse_num(row[1], mix_csv.string());
    spec.neg = parse_num(row[2], mix_csv.string());
    spec.neu = parse_num(row[3], mix_csv.string());
    ++mix_count;
  }
  if (mix_count != weeks.size()) {
    throw ConfigError("mix schedule covers " + std::to_string(mix_count) +
                      " weeks, alpha schedule has " + std::to_string(weeks.size()));
  }
  return weeks;
}

void write_schedule(const std::vector<WeekSpec>& weeks,
                    const std::filesystem::path& alpha_csv,
                    const std::filesystem::path& mix_csv) {
  std::vector<std::vector<std::string>> alpha_rows{{"week", "alpha"}};
  std::vector<std::vector<std::string>> mix_rows{{"week", "pos", "neg", "neu"}};
  char buf[64];
  for (std::size_t i = 0; i < weeks.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.10g", weeks[i].alpha);
    alpha_rows.push_back({std::to_string(i + 1), buf});
    std::vector<std::string> row{std::to_string(i + 1)};
    for (double v : {weeks[i].pos, weeks[i].neg, weeks[i].neu}) {
      std::snprintf(buf, sizeof(buf), "%.10g", v);
      row.push_back(buf);
    }
    mix_rows.push_back(std::move(row));
  }
  csvio::write_file(alpha_csv, alpha_rows);
  csvio::write_file(mix_csv, mix_rows);
}

}  // namespace zipfsignal::synth
