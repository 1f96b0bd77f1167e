#include "zipfsignal/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zipfsignal/csv.hpp"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/signal.hpp"
#include "zipfsignal/svg.hpp"
#include "zipfsignal/synth.hpp"

namespace zipfsignal::cli {

namespace fs = std::filesystem;

lingproc::ExclusionList PipelineConfig::exclusions() const {
  return exclusions_path ? lingproc::ExclusionList::load(*exclusions_path)
                         : lingproc::ExclusionList::defaults();
}

lingproc::PronounList PipelineConfig::pronouns() const {
  return pronouns_path ? lingproc::PronounList::load(*pronouns_path)
                       : lingproc::PronounList::defaults();
}

int IngestReport::inserted() const {
  int n = 0;
  for (const auto& [source, tally] : by_source) n += tally.inserted;
  return n;
}

int IngestReport::duplicates() const {
  int n = 0;
  for (const auto& [source, tally] : by_source) n += tally.duplicates;
  return n;
}

int IngestReport::errors() const {
  int n = 0;
  for (const auto& [source, tally] : by_source) n += tally.errors;
  return n;
}

IngestReport cmd_ingest(const fs::path& manifest, const fs::path& raw_dir,
                        const fs::path& store_path,
                        corpus::Article::Format format,
                        const std::optional<corpus::DateRange>& range) {
  if (!fs::exists(manifest)) {
    throw ConfigError("manifest does not exist: " + manifest.string());
  }
  if (!fs::exists(raw_dir)) {
    throw ConfigError("raw directory does not exist: " + raw_dir.string());
  }
  corpus::ArticleStore store = corpus::ArticleStore::open(store_path, true);

  IngestReport report;
  std::ifstream in(manifest);
  if (!in) throw DataError("cannot open manifest: " + manifest.string());
  csvio::Reader reader(in);
  std::vector<std::string> row;
  bool first = true;
  while (reader.next(row)) {
    if (first && !row.empty() && row[0] == "filename") {
      first = false;
      continue;
    }
    first = false;
    if (row.size() != 4) {
      throw DataError(manifest.string() + " line " +
                      std::to_string(reader.line_no()) +
                      ": expected filename,source,url,date");
    }
    const std::string& filename = row[0];
    const std::string& source = row[1];
    SourceTally& tally = report.by_source[source];
    try {
      const fs::path raw_path = raw_dir / filename;
      std::ifstream raw_file(raw_path, std::ios::binary);
      if (!raw_file) throw DataError("cannot open raw file: " + raw_path.string());
      std::string raw((std::istreambuf_iterator<char>(raw_file)),
                      std::istreambuf_iterator<char>());
      corpus::ArticleMeta meta;
      meta.id = fs::path(filename).stem().string();
      meta.source = source;
      meta.url = row[2];
      meta.date = Date::parse(row[3]);
      meta.title = meta.id;
      const corpus::Article article = corpus::ingest_article(raw, meta, format, range);
      if (store.put(article)) {
        ++tally.inserted;
      } else {
        ++tally.duplicates;
      }
    } catch (const Error& e) {
      ++tally.errors;
      report.error_messages.push_back(filename + ": " + e.what());
    }
  }
  return report;
}

namespace {

// Absolute week coordinate for chart x axes.
double week_x(const WeekId& w) {
  return static_cast<double>(w.thursday().to_days()) / 7.0;
}

svg::ChartSeries chart_series(const WeeklySeries& s, std::string color) {
  svg::ChartSeries out;
  out.label = s.label;
  out.color = std::move(color);
  for (const auto& [week, value] : s.entries) {
    if (value) out.points.emplace_back(week_x(week), *value);
  }
  return out;
}

void add_week_ticks(svg::LineChart& chart, const std::vector<WeeklySeries*>& all) {
  std::optional<WeekId> first, last;
  for (const WeeklySeries* s : all) {
    for (const auto& [week, value] : s->entries) {
      if (!value) continue;
      if (!first || week < *first) first = week;
      if (!last || *last < week) last = week;
    }
  }
  if (!first || !last) return;
  const std::int64_t span = week_distance(*first, *last);
  const std::int64_t step = std::max<std::int64_t>(1, span / 6);
  for (WeekId w = *first; w <= *last;) {
    chart.add_x_tick(week_x(w), w.to_string());
    for (std::int64_t k = 0; k < step; ++k) w = w.next();
    if (week_distance(w, *last) < step / 2) break;
  }
  chart.add_x_tick(week_x(*last), last->to_string());
}

constexpr const char* kModelColor = "#1f77b4";
constexpr const char* kIndexColors[] = {"#d62728", "#2ca02c", "#9467bd",
                                        "#8c564b", "#e377c2"};

std::vector<WeeklySeries> load_index_weekly_csvs(const fs::path& out_dir) {
  std::vector<WeeklySeries> indices;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("index_", 0) == 0 &&
        name.size() > 17 &&  // index_<sym>_weekly.csv
        name.substr(name.size() - 11) == "_weekly.csv") {
      indices.push_back(WeeklySeries::read_csv(entry.path()));
    }
  }
  std::sort(indices.begin(), indices.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });
  return indices;
}

// Overlays one signal CSV on any index weekly closes, min-max normalized.
void render_overlay_chart(const fs::path& out_dir, const std::string& csv_name,
                          const std::string& svg_name, const std::string& title) {
  const fs::path signal_csv = out_dir / csv_name;
  if (!fs::exists(signal_csv)) return;
  WeeklySeries signal_series = WeeklySeries::read_csv(signal_csv);

  svg::LineChart chart(title);
  chart.set_normalize_y(true);
  std::vector<WeeklySeries> indices = load_index_weekly_csvs(out_dir);

  std::vector<WeeklySeries*> all{&signal_series};
  for (auto& idx : indices) all.push_back(&idx);
  add_week_ticks(chart, all);
  chart.add_series(chart_series(signal_series, kModelColor));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    chart.add_series(chart_series(indices[i], kIndexColors[i % 5]));
  }
  chart.write(out_dir / svg_name);
}

void render_model_chart(const fs::path& out_dir) {
  render_overlay_chart(out_dir, "model.csv", "model.svg",
                       "Windowed power-law model vs weekly index closes");
  render_overlay_chart(out_dir, "deviation.csv", "deviation.svg",
                       "Weekly exponent deviation from the corpus fit");
}

void render_kl_chart(const fs::path& out_dir) {
  const fs::path pos_csv = out_dir / "kl_positive.csv";
  const fs::path neg_csv = out_dir / "kl_negative.csv";
  const fs::path neu_csv = out_dir / "kl_neutral.csv";
  if (!fs::exists(pos_csv) || !fs::exists(neg_csv) || !fs::exists(neu_csv)) return;
  WeeklySeries pos = WeeklySeries::read_csv(pos_csv);
  WeeklySeries neg = WeeklySeries::read_csv(neg_csv);
  WeeklySeries neu = WeeklySeries::read_csv(neu_csv);

  svg::LineChart chart("Symmetric K-L divergence of valency-rated pairs (8-week window)");
  std::vector<WeeklySeries*> all{&pos, &neg, &neu};
  add_week_ticks(chart, all);
  chart.add_series(chart_series(pos, "#2ca02c"));
  chart.add_series(chart_series(neg, "#d62728"));
  chart.add_series(chart_series(neu, "#1f77b4"));
  chart.write(out_dir / "kl.svg");
}

std::map<WeekId, lingproc::PhraseCounts> pipeline_weekly_counts(
    const PipelineConfig& config, const corpus::ArticleStore& store,
    lingproc::PhraseKind kind) {
  const auto bins = corpus::bin_by_week(store, {config.from, config.to});
  return signal::weekly_counts(store, bins, kind, config.exclusions(),
                               config.pronouns(), config.jobs);
}

corpus::ArticleStore open_store_checked(const fs::path& path) {
  if (!fs::exists(path)) {
    throw ConfigError("store does not exist: " + path.string());
  }
  return corpus::ArticleStore::open(path, false);
}

}  // namespace

AnalyzeResult cmd_analyze(const PipelineConfig& config) {
  if (config.to < config.from) throw ConfigError("empty date range");
  corpus::ArticleStore store = open_store_checked(config.store);
  fs::create_directories(config.out_dir);

  const auto weekly = pipeline_weekly_counts(config, store, config.kind);

  lingproc::PhraseCounts corpus_counts;
  corpus_counts.kind = config.kind;
  for (const auto& [week, counts] : weekly) corpus_counts.merge(counts);
  if (corpus_counts.counts.size() < 3) {
    throw NumericError("corpus has fewer than 3 distinct phrases; cannot fit");
  }

  powerlaw::FitOptions corpus_options;
  corpus_options.max_rank = config.max_rank;
  const powerlaw::PowerLawFit corpus_fit =
      powerlaw::fit_power_law(powerlaw::rank_frequency(corpus_counts), corpus_options);

  powerlaw::FitOptions weekly_options;
  weekly_options.mode = config.fit_mode;
  weekly_options.fixed_c = corpus_fit.c;
  weekly_options.max_rank = config.max_rank;

  AnalyzeResult result;
  result.corpus_fit = corpus_fit;
  result.alpha = signal::alpha_series(weekly, weekly_options,
                                      lingproc::phrase_kind_name(config.kind),
                                      config.jobs);
  result.deviation = signal::deviation_series(result.alpha, corpus_fit.alpha);
  result.model = config.causal_window ? signal::windowed_model_causal(result.alpha)
                                      : signal::windowed_model(result.alpha);

  result.alpha_csv = config.out_dir / "alpha.csv";
  result.deviation_csv = config.out_dir / "deviation.csv";
  result.model_csv = config.out_dir / "model.csv";
  result.fit_corpus_csv = config.out_dir / "fit_corpus.csv";
  result.chart_svg = config.out_dir / "model.svg";

  result.alpha.write_csv(result.alpha_csv);
  result.deviation.write_csv(result.deviation_csv);
  result.model.write_csv(result.model_csv);
  powerlaw::write_fit_csv(result.fit_corpus_csv, corpus_fit);

  for (const fs::path& index_path : config.index_paths) {
    const market::IndexSeries index = market::load_index_csv(index_path);
    const WeeklySeries closes = market::weekly_close(index);
    closes.write_csv(config.out_dir / ("index_" + index.symbol + "_weekly.csv"));
  }
  // The chart reads back the CSVs just written, never in-memory state.
  render_model_chart(config.out_dir);
  return result;
}

std::vector<CorrelationRow> cmd_correlate(
    const fs::path& signal_csv, const std::vector<fs::path>& index_csvs,
    market::Tail tail, bool diff_transform, const fs::path& out_csv) {
  if (!fs::exists(signal_csv)) {
    throw ConfigError("signal CSV does not exist: " + signal_csv.string());
  }
  if (index_csvs.empty()) throw ConfigError("no index CSVs given");
  WeeklySeries signal_series = WeeklySeries::read_csv(signal_csv);
  if (diff_transform) signal_series = market::week_over_week_diff(signal_series);

  std::vector<CorrelationRow> rows;
  for (const fs::path& index_path : index_csvs) {
    const market::IndexSeries index = market::load_index_csv(index_path);
    WeeklySeries closes = market::weekly_close(index);
    if (diff_transform) closes = market::week_over_week_diff(closes);
    const market::AlignedPair pair = market::align(signal_series, closes);
    CorrelationRow row;
    row.signal_label = signal_series.label;
    row.index_symbol = index.symbol;
    row.report = market::pearson(pair.a, pair.b, tail);
    rows.push_back(std::move(row));
  }

  std::vector<std::vector<std::string>> csv_rows;
  csv_rows.push_back({"signal_label", "index_symbol", "n", "r", "t", "df",
                      "p_one_tailed"});
  char buf[64];
  for (const CorrelationRow& row : rows) {
    std::vector<std::string> fields{row.signal_label, row.index_symbol,
                                    std::to_string(row.report.n)};
    std::snprintf(buf, sizeof(buf), "%.9g", row.report.r);
    fields.emplace_back(buf);
    std::snprintf(buf, sizeof(buf), "%.9g", row.report.t_stat);
    fields.emplace_back(buf);
    fields.emplace_back(std::to_string(row.report.df));
    std::snprintf(buf, sizeof(buf), "%.9g", row.report.p_one_tailed);
    fields.emplace_back(buf);
    csv_rows.push_back(std::move(fields));
  }
  csvio::write_file(out_csv, csv_rows);
  return rows;
}

KlResult cmd_kl(const PipelineConfig& config) {
  if (!config.lexicon_path) {
    throw ConfigError("kl requires a valency lexicon (--lexicon)");
  }
  if (!fs::exists(*config.lexicon_path)) {
    throw ConfigError("lexicon does not exist: " + config.lexicon_path->string());
  }
  if (config.to < config.from) throw ConfigError("empty date range");
  corpus::ArticleStore store = open_store_checked(config.store);
  fs::create_directories(config.out_dir);

  const divergence::ValencyLexicon lexicon =
      divergence::ValencyLexicon::load_csv(*config.lexicon_path);
  const auto weekly = pipeline_weekly_counts(
      config, store, lingproc::PhraseKind::kLemmaObjectPair);

  KlResult result;
  result.positive = divergence::kl_series(weekly, lexicon,
                                          divergence::Valency::kPositive,
                                          config.epsilon, config.jobs);
  result.negative = divergence::kl_series(weekly, lexicon,
                                          divergence::Valency::kNegative,
                                          config.epsilon, config.jobs);
  result.neutral = divergence::kl_series(weekly, lexicon,
                                         divergence::Valency::kNeutral,
                                         config.epsilon, config.jobs);
  result.breakouts = divergence::detect_breakout_regions(
      result.positive, result.negative, config.breakout_margin,
      config.breakout_min_len);

  result.positive_csv = config.out_dir / "kl_positive.csv";
  result.negative_csv = config.out_dir / "kl_negative.csv";
  result.neutral_csv = config.out_dir / "kl_neutral.csv";
  result.chart_svg = config.out_dir / "kl.svg";
  result.regions_csv = config.out_dir / "breakout_regions.csv";

  result.positive.write_csv(result.positive_csv);
  result.negative.write_csv(result.negative_csv);
  result.neutral.write_csv(result.neutral_csv);

  std::vector<std::vector<std::string>> region_rows{{"first_week", "last_week"}};
  for (const divergence::WeekInterval& interval : result.breakouts) {
    region_rows.push_back({interval.first.to_string(), interval.last.to_string()});
  }
  csvio::write_file(result.regions_csv, region_rows);
  render_kl_chart(config.out_dir);
  return result;
}

void render_charts_from_csv(const fs::path& out_dir) {
  if (!fs::exists(out_dir)) {
    throw ConfigError("output directory does not exist: " + out_dir.string());
  }
  render_model_chart(out_dir);
  render_kl_chart(out_dir);
}

StoreStats store_stats(const fs::path& store_path) {
  const corpus::ArticleStore store = open_store_checked(store_path);
  StoreStats stats;
  for (const corpus::Article& article : store.articles()) {
    ++stats.articles;
    ++stats.articles_by_source[article.source];
    ++stats.articles_by_year[article.published_at.year];
    const std::string text = lingproc::plain_text_of(article);
    bool in_word = false;
    for (char ch : text) {
      if (ch == ' ') {
        in_word = false;
      } else if (!in_word) {
        in_word = true;
        ++stats.words;
      }
    }
  }
  return stats;
}

namespace {

Date parse_config_date(const std::string& s, const char* flag) {
  try {
    return Date::parse(s);
  } catch (const DataError& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
}

void print_ingest_report(const IngestReport& report) {
  std::printf("%-12s %10s %10s %8s\n", "source", "inserted", "duplicates",
              "errors");
  for (const auto& [source, tally] : report.by_source) {
    std::printf("%-12s %10d %10d %8d\n", source.c_str(), tally.inserted,
                tally.duplicates, tally.errors);
  }
  std::printf("%-12s %10d %10d %8d\n", "total", report.inserted(),
              report.duplicates(), report.errors());
  for (const std::string& message : report.error_messages) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
  }
}

struct CliArgs {
  PipelineConfig pipeline;
  std::string from_str, to_str, kind_str = "verb", fit_mode_str = "free";
  std::string tail_str = "positive";
  std::vector<std::string> index_strs;
  std::string manifest, raw_dir, format_str = "plain";
  std::string signal_csv;
  std::string store_str, out_str = "out";
  std::string exclusions_str, pronouns_str, lexicon_str;
  std::string alpha_schedule, mix_schedule, start_str = "2006-01-02";
  std::string charts_dir;
  std::uint64_t seed = 1;
  int articles_per_week = 40, sentences_per_article = 30;
};

void fill_pipeline(CliArgs& args) {
  args.pipeline.store = args.store_str;
  args.pipeline.out_dir = args.out_str;
  if (!args.from_str.empty()) {
    args.pipeline.from = parse_config_date(args.from_str, "--from");
  }
  if (!args.to_str.empty()) {
    args.pipeline.to = parse_config_date(args.to_str, "--to");
  }
  args.pipeline.kind = lingproc::parse_phrase_kind(args.kind_str);
  if (args.fit_mode_str == "free") {
    args.pipeline.fit_mode = powerlaw::FitMode::kFreeIntercept;
  } else if (args.fit_mode_str == "fixed") {
    args.pipeline.fit_mode = powerlaw::FitMode::kFixedIntercept;
  } else {
    throw ConfigError("--fit-mode must be free or fixed");
  }
  if (args.tail_str == "positive") {
    args.pipeline.tail = market::Tail::kPositive;
  } else if (args.tail_str == "negative") {
    args.pipeline.tail = market::Tail::kNegative;
  } else {
    throw ConfigError("--tail must be positive or negative");
  }
  if (!args.exclusions_str.empty()) args.pipeline.exclusions_path = args.exclusions_str;
  if (!args.pronouns_str.empty()) args.pipeline.pronouns_path = args.pronouns_str;
  if (!args.lexicon_str.empty()) args.pipeline.lexicon_path = args.lexicon_str;
  for (const std::string& s : args.index_strs) {
    args.pipeline.index_paths.emplace_back(s);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Power-law and K-L divergence signals from news-corpus language"};
  app.require_subcommand(1);
  app.set_config("--config")->envname("ZIPFSIGNAL_CONFIG");

  CliArgs args;

  CLI::App* ingest = app.add_subcommand(
      "ingest", "Ingest raw articles listed in a manifest into a store");
  ingest->add_option("--manifest", args.manifest, "CSV: filename,source,url,date")
      ->required();
  ingest->add_option("--raw-dir", args.raw_dir, "Directory with raw files")
      ->required();
  ingest->add_option("--store", args.store_str, "Article store path")->required();
  ingest->add_option("--format", args.format_str, "plain or vert")
      ->check(CLI::IsMember({"plain", "vert"}));
  ingest->add_option("--from", args.from_str, "Corpus range start (YYYY-MM-DD)");
  ingest->add_option("--to", args.to_str, "Corpus range end (YYYY-MM-DD)");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Weekly power-law fits, deviation series and windowed model");
  analyze->add_option("--store", args.store_str)->required();
  analyze->add_option("--from", args.from_str)->required();
  analyze->add_option("--to", args.to_str)->required();
  analyze->add_option("--kind", args.kind_str,
                      "verb|noun|lop|baseline_e|baseline_third");
  analyze->add_option("--fit-mode", args.fit_mode_str, "free|fixed weekly intercept");
  analyze->add_option("--max-rank", args.pipeline.max_rank,
                      "Truncate fits to the top N ranks (0 = all)");
  analyze->add_flag("--causal-window", args.pipeline.causal_window,
                    "Use the trailing 8-week window instead of the centered one");
  analyze->add_option("--exclusions", args.exclusions_str, "Verb exclusion list file");
  analyze->add_option("--pronouns", args.pronouns_str, "Pronoun list file");
  analyze->add_option("--index", args.index_strs, "Index CSV (repeatable)");
  analyze->add_option("--out", args.out_str, "Output directory");
  analyze->add_option("--jobs", args.pipeline.jobs, "Worker threads");

  CLI::App* correlate = app.add_subcommand(
      "correlate", "Pearson correlations between a signal CSV and index closes");
  correlate->add_option("--signal", args.signal_csv, "Signal series CSV")->required();
  correlate->add_option("--index", args.index_strs, "Index CSV (repeatable)")
      ->required();
  correlate->add_option("--tail", args.tail_str, "positive|negative");
  correlate->add_flag("--diff", args.pipeline.diff_transform,
                      "Correlate week-over-week differences (extension)");
  correlate->add_option("--out", args.out_str, "Output directory");

  CLI::App* kl = app.add_subcommand(
      "kl", "Weekly symmetric K-L divergence of valency-rated pairs");
  kl->add_option("--store", args.store_str)->required();
  kl->add_option("--from", args.from_str)->required();
  kl->add_option("--to", args.to_str)->required();
  kl->add_option("--lexicon", args.lexicon_str, "Valency lexicon CSV")->required();
  kl->add_option("--epsilon", args.pipeline.epsilon, "Additive smoothing");
  kl->add_option("--margin", args.pipeline.breakout_margin,
                 "Breakout margin (nats)");
  kl->add_option("--min-len", args.pipeline.breakout_min_len,
                 "Minimum breakout length (weeks)");
  kl->add_option("--exclusions", args.exclusions_str, "Verb exclusion list file");
  kl->add_option("--pronouns", args.pronouns_str, "Pronoun list file");
  kl->add_option("--out", args.out_str, "Output directory");
  kl->add_option("--jobs", args.pipeline.jobs, "Worker threads");

  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a scheduled synthetic pre-tagged corpus");
  synth->add_option("--alpha-schedule", args.alpha_schedule, "CSV: week,alpha")
      ->required();
  synth->add_option("--mix-schedule", args.mix_schedule, "CSV: week,pos,neg,neu")
      ->required();
  synth->add_option("--out", args.out_str, "Output directory");
  synth->add_option("--seed", args.seed, "Generator seed");
  synth->add_option("--start", args.start_str, "First week date (YYYY-MM-DD)");
  synth->add_option("--articles-per-week", args.articles_per_week);
  synth->add_option("--sentences-per-article", args.sentences_per_article);

  CLI::App* report = app.add_subcommand(
      "report", "Store tallies by source and year; optionally re-render charts");
  report->add_option("--store", args.store_str);
  report->add_option("--charts", args.charts_dir,
                     "Re-render charts from the CSVs in this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*ingest) {
      std::optional<corpus::DateRange> range;
      if (!args.from_str.empty() || !args.to_str.empty()) {
        if (args.from_str.empty() || args.to_str.empty()) {
          throw ConfigError("--from and --to must be given together");
        }
        range = corpus::DateRange{parse_config_date(args.from_str, "--from"),
                                  parse_config_date(args.to_str, "--to")};
      }
      const auto format = args.format_str == "vert" ? corpus::Article::Format::kVert
                                                    : corpus::Article::Format::kPlain;
      const IngestReport result =
          cmd_ingest(args.manifest, args.raw_dir, args.store_str, format, range);
      print_ingest_report(result);
      return result.errors() == 0 ? kExitOk : kExitData;
    }
    if (*analyze) {
      fill_pipeline(args);
      const AnalyzeResult result = cmd_analyze(args.pipeline);
      std::printf("corpus fit: alpha=%.6f c=%.6f r2=%.6f n=%d\n",
                  result.corpus_fit.alpha, result.corpus_fit.c,
                  result.corpus_fit.r_squared, result.corpus_fit.n_points);
      std::printf("wrote %s\n", result.alpha_csv.string().c_str());
      std::printf("wrote %s\n", result.deviation_csv.string().c_str());
      std::printf("wrote %s\n", result.model_csv.string().c_str());
      std::printf("wrote %s\n", result.fit_corpus_csv.string().c_str());
      std::printf("wrote %s\n", result.chart_svg.string().c_str());
      return kExitOk;
    }
    if (*correlate) {
      fill_pipeline(args);
      fs::create_directories(args.out_str);
      const auto rows =
          cmd_correlate(args.signal_csv, args.pipeline.index_paths,
                        args.pipeline.tail, args.pipeline.diff_transform,
                        fs::path(args.out_str) / "correlations.csv");
      std::printf("%-20s %-12s %6s %10s %10s %5s %12s\n", "signal", "index", "n",
                  "r", "t", "df", "p_one_tailed");
      for (const CorrelationRow& row : rows) {
        std::printf("%-20s %-12s %6d %10.4f %10.3f %5d %12.4g\n",
                    row.signal_label.c_str(), row.index_symbol.c_str(),
                    row.report.n, row.report.r, row.report.t_stat, row.report.df,
                    row.report.p_one_tailed);
      }
      return kExitOk;
    }
    if (*kl) {
      fill_pipeline(args);
      const KlResult result = cmd_kl(args.pipeline);
      std::printf("wrote %s\n", result.positive_csv.string().c_str());
      std::printf("wrote %s\n", result.negative_csv.string().c_str());
      std::printf("wrote %s\n", result.neutral_csv.string().c_str());
      std::printf("wrote %s\n", result.chart_svg.string().c_str());
      if (result.breakouts.empty()) {
        std::printf("no positive-breakout regions\n");
      }
      for (const divergence::WeekInterval& interval : result.breakouts) {
        std::printf("positive breakout: %s .. %s (%lld weeks)\n",
                    interval.first.to_string().c_str(),
                    interval.last.to_string().c_str(),
                    static_cast<long long>(interval.length()));
      }
      return kExitOk;
    }
    if (*synth) {
      synth::GeneratorConfig config;
      config.weeks = synth::load_schedule(args.alpha_schedule, args.mix_schedule);
      config.start = parse_config_date(args.start_str, "--start");
      config.articles_per_week = args.articles_per_week;
      config.sentences_per_article = args.sentences_per_article;
      config.seed = args.seed;
      const synth::GeneratorOutput result = synth::generate(config, args.out_str);
      std::printf("generated %d articles under %s\n", result.article_count,
                  result.raw_dir.string().c_str());
      std::printf("manifest: %s\n", result.manifest_csv.string().c_str());
      std::printf("ground truth: %s\n", result.ground_truth_csv.string().c_str());
      std::printf("lexicon: %s\n", result.lexicon_csv.string().c_str());
      std::printf("index: %s\n", result.index_csv.string().c_str());
      return kExitOk;
    }
    if (*report) {
      if (!args.store_str.empty()) {
        const StoreStats stats = store_stats(args.store_str);
        std::printf("articles: %d, words: %lld\n", stats.articles,
                    static_cast<long long>(stats.words));
        for (const auto& [source, n] : stats.articles_by_source) {
          std::printf("source %-12s %8d\n", source.c_str(), n);
        }
        for (const auto& [year, n] : stats.articles_by_year) {
          std::printf("year   %-12d %8d\n", year, n);
        }
      }
      if (!args.charts_dir.empty()) {
        render_charts_from_csv(args.charts_dir);
        std::printf("re-rendered charts under %s\n", args.charts_dir.c_str());
      }
      if (args.store_str.empty() && args.charts_dir.empty()) {
        throw ConfigError("report: give --store and/or --charts");
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return kExitNumeric;
  } catch (const DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitOk;
}

}  // namespace zipfsignal::cli
