#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zipfsignal/corpus.hpp"
#include "zipfsignal/divergence.hpp"
#include "zipfsignal/lingproc.hpp"
#include "zipfsignal/market.hpp"
#include "zipfsignal/powerlaw.hpp"
#include "zipfsignal/series.hpp"

namespace zipfsignal::cli {

// Exit codes: distinct classes so scripts can tell config mistakes from bad
// data from numeric-domain failures.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;    // unexpected
inline constexpr int kExitConfig = 2;   // bad flags/config/missing files
inline constexpr int kExitData = 3;     // parse/I-O/validation failures
inline constexpr int kExitNumeric = 4;  // insufficient data, domain errors

struct PipelineConfig {
  std::filesystem::path store;
  Date from;
  Date to;
  lingproc::PhraseKind kind = lingproc::PhraseKind::kVerbLemma;
  powerlaw::FitMode fit_mode = powerlaw::FitMode::kFreeIntercept;
  std::uint32_t max_rank = 0;
  bool causal_window = false;
  double epsilon = 0.5;
  double breakout_margin = 0.05;
  int breakout_min_len = 4;
  std::optional<std::filesystem::path> exclusions_path;
  std::optional<std::filesystem::path> pronouns_path;
  std::optional<std::filesystem::path> lexicon_path;
  std::vector<std::filesystem::path> index_paths;
  std::filesystem::path out_dir;
  int jobs = 1;
  market::Tail tail = market::Tail::kPositive;
  bool diff_transform = false;

  lingproc::ExclusionList exclusions() const;
  lingproc::PronounList pronouns() const;
};

struct SourceTally {
  int inserted = 0;
  int duplicates = 0;
  int errors = 0;
};

struct IngestReport {
  std::map<std::string, SourceTally> by_source;
  std::vector<std::string> error_messages;

  int inserted() const;
  int duplicates() const;
  int errors() const;
};

// Reads a manifest (filename,source,url,date), ingests each referenced raw
// file into the store, deduplicates, and tallies per source. Per-file
// failures are collected, not fatal.
IngestReport cmd_ingest(const std::filesystem::path& manifest,
                        const std::filesystem::path& raw_dir,
                        const std::filesystem::path& store_path,
                        corpus::Article::Format format,
                        const std::optional<corpus::DateRange>& range = std::nullopt);

struct AnalyzeResult {
  powerlaw::PowerLawFit corpus_fit;
  WeeklySeries alpha;
  WeeklySeries deviation;
  WeeklySeries model;
  std::filesystem::path alpha_csv;
  std::filesystem::path deviation_csv;
  std::filesystem::path model_csv;
  std::filesystem::path fit_corpus_csv;
  std::filesystem::path chart_svg;
};

// Binning -> extraction -> weekly fits -> deviation -> windowed model, plus
// CSV outputs and a chart overlaying the model on any supplied index closes.
AnalyzeResult cmd_analyze(const PipelineConfig& config);

struct CorrelationRow {
  std::string signal_label;
  std::string index_symbol;
  market::CorrelationReport report;
};

// One correlation per (signal, index) pair; also written as CSV rows
// signal_label,index_symbol,n,r,t,df,p_one_tailed.
std::vector<CorrelationRow> cmd_correlate(
    const std::filesystem::path& signal_csv,
    const std::vector<std::filesystem::path>& index_csvs, market::Tail tail,
    bool diff_transform, const std::filesystem::path& out_csv);

struct KlResult {
  WeeklySeries positive;
  WeeklySeries negative;
  WeeklySeries neutral;
  std::vector<divergence::WeekInterval> breakouts;
  std::filesystem::path positive_csv;
  std::filesystem::path negative_csv;
  std::filesystem::path neutral_csv;
  std::filesystem::path chart_svg;
  std::filesystem::path regions_csv;
};

// Weekly valency K-L divergences against the whole corpus, their chart, and
// the positive-breakout regions.
KlResult cmd_kl(const PipelineConfig& config);

// Re-renders charts from previously emitted CSVs (no other state), so
// deleting charts and re-running reproduces them byte for byte.
void render_charts_from_csv(const std::filesystem::path& out_dir);

// Store statistics in the by-source / by-year tally format.
struct StoreStats {
  std::map<std::string, int> articles_by_source;
  std::map<int, int> articles_by_year;
  int articles = 0;
  std::int64_t words = 0;
};

StoreStats store_stats(const std::filesystem::path& store_path);

// Full argv interface; returns a process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace zipfsignal::cli
