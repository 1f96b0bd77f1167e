// Acceptance suite: one criterion per function, each printing a PASS/FAIL
// line with its runtime. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "zipfsignal/cli.hpp"
#include "zipfsignal/divergence.hpp"
#include "zipfsignal/market.hpp"
#include "zipfsignal/powerlaw.hpp"
#include "zipfsignal/rng.hpp"
#include "zipfsignal/signal.hpp"
#include "zipfsignal/stats.hpp"
#include "zipfsignal/synth.hpp"

namespace fs = std::filesystem;
using namespace zipfsignal;

namespace {

struct Checker {
  bool ok = true;
  std::string first_failure;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
    ok = ok && condition;
  }
};

fs::path work_dir() {
  return fs::temp_directory_path() / "zipfsignal_acceptance";
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Exact-fit recovery of the published corpus constants.

void criterion_exact_fit(Checker& c) {
  const auto make = [](double intercept, double alpha) {
    powerlaw::RankFrequencyDistribution dist;
    for (int r = 1; r <= 500; ++r) {
      dist.points.emplace_back(r, std::exp(intercept) *
                                      std::pow(static_cast<double>(r), -alpha));
    }
    return dist;
  };
  for (const auto& [intercept, alpha] :
       {std::pair<double, double>{10.8407, 0.8137}, {9.9224, 0.7299}}) {
    const auto fit = powerlaw::fit_power_law(make(intercept, alpha));
    c.expect(std::fabs(fit.alpha - alpha) < 1e-9,
             "alpha error " + fmt(std::fabs(fit.alpha - alpha)));
    c.expect(std::fabs(fit.c - intercept) < 1e-9,
             "c error " + fmt(std::fabs(fit.c - intercept)));
    c.expect(fit.r_squared > 1.0 - 1e-12, "r^2 " + fmt(fit.r_squared));
  }
}

// ---------------------------------------------------------------------------
// 2. Sampler-loop recovery against the brute-force grid-search oracle.

void criterion_sampler_loop(Checker& c) {
  const auto counts = powerlaw::sample_zipf(1.0, 5000, 1000000, 20060102);
  const auto dist = powerlaw::rank_frequency(counts);
  const auto fit = powerlaw::fit_power_law(dist);

  // Oracle: exhaustive grid over alpha at 1e-4 resolution minimizing the
  // same squared residuals in log-log space, direct arithmetic only.
  std::vector<double> log_rank, log_freq;
  for (const auto& [rank, freq] : dist.points) {
    log_rank.push_back(std::log(static_cast<double>(rank)));
    log_freq.push_back(std::log(freq));
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < log_rank.size(); ++i) {
    mean_x += log_rank[i];
    mean_y += log_freq[i];
  }
  mean_x /= static_cast<double>(log_rank.size());
  mean_y /= static_cast<double>(log_rank.size());

  double best_alpha = 0.5, best_ss = 1e300;
  for (int step = 0; step <= 10000; ++step) {
    const double alpha = 0.5 + step * 1e-4;
    const double intercept = mean_y + alpha * mean_x;
    double ss = 0.0;
    for (std::size_t i = 0; i < log_rank.size(); ++i) {
      const double err = log_freq[i] - (intercept - alpha * log_rank[i]);
      ss += err * err;
    }
    if (ss < best_ss) {
      best_ss = ss;
      best_alpha = alpha;
    }
  }
  c.expect(std::fabs(fit.alpha - best_alpha) <= 1e-3,
           "fit vs grid oracle: " + fmt(fit.alpha) + " vs " + fmt(best_alpha));
  c.expect(std::fabs(fit.alpha - 1.0) <= 0.08,
           "fit vs true exponent: " + fmt(fit.alpha));
}

// ---------------------------------------------------------------------------
// 3. Windowed model equals direct arithmetic on 1,000 random series.

void criterion_window_oracle(Checker& c) {
  SplitMix64 rng(333);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> a;
    for (int i = 0; i < 50; ++i) a.push_back(0.05 + 2.0 * rng.next_double());

    WeeklySeries s;
    WeekId w{2006, 1};
    for (double v : a) {
      s.set(w, v);
      w = w.next();
    }
    const WeeklySeries model = signal::windowed_model(s);

    WeekId at{2006, 1};
    for (std::size_t i = 0; i < a.size(); ++i, at = at.next()) {
      const auto got = model.at(at);
      if (i < 4 || i + 4 >= a.size()) {
        c.expect(!got.has_value(), "boundary week not missing");
        continue;
      }
      double lead = 1.0, lag = 1.0;
      for (std::size_t k = i - 3; k <= i + 4; ++k) lead *= a[k];
      for (std::size_t k = i - 4; k <= i + 3; ++k) lag *= a[k];
      const double want =
          (std::pow(lead, 1.0 / 8.0) + std::pow(lag, 1.0 / 8.0)) / 2.0;
      c.expect(got.has_value(), "interior week missing");
      if (got) {
        c.expect(std::fabs(*got - want) <= 1e-12 * std::fabs(want),
                 "relative error " + fmt(std::fabs(*got - want) / want));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 4. Symmetric K-L suite.

divergence::CategoryDistribution acceptance_dist(const std::vector<double>& probs) {
  divergence::CategoryDistribution d;
  d.category = divergence::Valency::kPositive;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    d.support.push_back("k" + std::to_string(i));
  }
  d.probs = probs;
  return d;
}

divergence::CategoryDistribution random_dist(SplitMix64& rng, std::size_t n) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = 1e-6 + rng.next_double();
    sum += v;
  }
  for (double& v : p) v /= sum;
  return acceptance_dist(p);
}

void criterion_kl_suite(Checker& c) {
  const auto p = acceptance_dist({0.5, 0.5});
  c.expect(divergence::symmetric_kl(p, p) == 0.0, "J(P,P) not exactly 0");

  const auto q = acceptance_dist({0.9, 0.1});
  // Hand-derived oracle from the definition.
  const double want = 0.5 * std::log(0.5 / 0.9) + 0.5 * std::log(0.5 / 0.1) +
                      0.9 * std::log(0.9 / 0.5) + 0.1 * std::log(0.1 / 0.5);
  const double got = divergence::symmetric_kl(p, q);
  c.expect(std::fabs(got - 0.8789) <= 1e-4, "J((.5,.5),(.9,.1)) = " + fmt(got));
  c.expect(std::fabs(got - want) <= 1e-12, "mismatch vs definition oracle");

  SplitMix64 rng(444);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.next_below(30);
    const auto a = random_dist(rng, n);
    const auto b = random_dist(rng, n);
    c.expect(std::fabs(divergence::symmetric_kl(a, b) -
                       divergence::symmetric_kl(b, a)) <= 1e-15,
             "symmetry violated");
  }
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + rng.next_below(30);
    const auto a = random_dist(rng, n);
    const auto b = random_dist(rng, n);
    c.expect(divergence::symmetric_kl(a, b) >= 0.0, "negative divergence");
  }
}

// ---------------------------------------------------------------------------
// 5. Correlation suite.

double t_sf_quadrature(double t, double df) {
  const double log_norm = std::lgamma((df + 1) / 2.0) - std::lgamma(df / 2.0) -
                          0.5 * std::log(df * 3.14159265358979323846);
  const auto density = [&](double u) {
    return std::exp(log_norm - (df + 1) / 2.0 * std::log1p(u * u / df));
  };
  const double lo = t, hi = t + 400.0;
  const int steps = 200000;
  const double h = (hi - lo) / steps;
  double sum = density(lo) + density(hi);
  for (int i = 1; i < steps; ++i) sum += density(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

void criterion_correlation_suite(Checker& c) {
  SplitMix64 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10 + rng.next_below(30);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.next_double() * 10.0;
      y[i] = 0.6 * x[i] + rng.next_double() * 4.0;
    }
    const auto report = market::pearson(x, y, market::Tail::kPositive);

    // Textbook-formula oracle, direct loops.
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sxy += (x[i] - mx) * (y[i] - my);
      sxx += (x[i] - mx) * (x[i] - mx);
      syy += (y[i] - my) * (y[i] - my);
    }
    const double r_oracle = sxy / std::sqrt(sxx * syy);
    c.expect(std::fabs(report.r - r_oracle) <= 1e-9,
             "r mismatch " + fmt(std::fabs(report.r - r_oracle)));

    const double df = static_cast<double>(n - 2);
    const double t = r_oracle * std::sqrt(df / (1.0 - r_oracle * r_oracle));
    const double p_oracle =
        t >= 0 ? t_sf_quadrature(t, df) : 1.0 - t_sf_quadrature(-t, df);
    c.expect(std::fabs(report.p_one_tailed - p_oracle) <= 1e-6,
             "p mismatch " + fmt(std::fabs(report.p_one_tailed - p_oracle)));
  }

  // The published headline pair must be significant at the stated level.
  const double t79 = 0.79 * std::sqrt(209.0 / (1.0 - 0.79 * 0.79));
  c.expect(stats::student_t_sf(t79, 209.0) < 1e-4, "r=.79,n=211 not p<1e-4");
}

// ---------------------------------------------------------------------------
// 6. End-to-end synthetic bubble: the verb pipeline tracks the index, both
//    method-control baselines do not.

std::vector<synth::WeekSpec> bubble_alpha_schedule() {
  std::vector<synth::WeekSpec> weeks(150);
  for (int w = 1; w <= 150; ++w) {
    synth::WeekSpec spec;
    if (w < 20) {
      spec.alpha = 0.75;
    } else if (w <= 80) {
      spec.alpha = 0.75 + 0.30 * (w - 20) / 60.0;  // ramp to 1.05
    } else {
      spec.alpha = 0.70;  // crash
    }
    spec.pos = 0.14;
    spec.neg = 0.27;
    spec.neu = 0.59;
    weeks[static_cast<std::size_t>(w - 1)] = spec;
  }
  return weeks;
}

void criterion_end_to_end_bubble(Checker& c) {
  const fs::path dir = work_dir() / "bubble";
  fs::remove_all(dir);

  synth::GeneratorConfig config;
  config.weeks = bubble_alpha_schedule();
  config.seed = 8;
  const synth::GeneratorOutput corpus = synth::generate(config, dir / "synth");

  const cli::IngestReport ingest =
      cli::cmd_ingest(corpus.manifest_csv, corpus.raw_dir, dir / "store.jsonl",
                      corpus::Article::Format::kVert);
  c.expect(ingest.errors() == 0, "ingest errors");

  cli::PipelineConfig pipeline;
  pipeline.store = dir / "store.jsonl";
  pipeline.from = Date{2006, 1, 2};
  pipeline.to = Date{2008, 11, 16};  // exactly the 150 scheduled weeks
  pipeline.index_paths = {corpus.index_csv};
  pipeline.jobs = 4;

  const auto correlate_kind = [&](lingproc::PhraseKind kind, const fs::path& out) {
    pipeline.kind = kind;
    pipeline.out_dir = out;
    const cli::AnalyzeResult analysis = cli::cmd_analyze(pipeline);
    const auto rows =
        cli::cmd_correlate(analysis.model_csv, {corpus.index_csv},
                           market::Tail::kPositive, false, out / "correlations.csv");
    return rows.at(0).report.r;
  };

  const double r_verb =
      correlate_kind(lingproc::PhraseKind::kVerbLemma, dir / "out_verb");
  const double r_edelim =
      correlate_kind(lingproc::PhraseKind::kBaselineEDelimited, dir / "out_e");
  const double r_third =
      correlate_kind(lingproc::PhraseKind::kBaselineThirdWord, dir / "out_third");

  std::printf("       verb r = %s, e-delimited r = %s, third-word r = %s\n",
              fmt(r_verb).c_str(), fmt(r_edelim).c_str(), fmt(r_third).c_str());
  c.expect(r_verb > 0.7, "verb pipeline r = " + fmt(r_verb));
  c.expect(std::fabs(r_edelim) < 0.3, "e-delimited baseline r = " + fmt(r_edelim));
  c.expect(std::fabs(r_third) < 0.3, "third-word baseline r = " + fmt(r_third));
}

// ---------------------------------------------------------------------------
// 7. Valency breakout detection on the scheduled positive ramp.

void criterion_valency_breakout(Checker& c) {
  const fs::path dir = work_dir() / "valency";
  fs::remove_all(dir);

  synth::GeneratorConfig config;
  config.weeks.assign(150, synth::WeekSpec{0.85, 0.14, 0.27, 0.59});
  for (int w = 30; w <= 50; ++w) {
    // Positive share ramps 0.14 -> 0.40; the rest keeps the 27:59 ratio.
    const double pos = 0.14 + 0.26 * (w - 30) / 20.0;
    synth::WeekSpec& spec = config.weeks[static_cast<std::size_t>(w - 1)];
    spec.pos = pos;
    spec.neg = 0.27 * (1.0 - pos) / 0.86;
    spec.neu = 1.0 - pos - spec.neg;
  }
  config.seed = 1;
  const synth::GeneratorOutput corpus = synth::generate(config, dir / "synth");
  cli::cmd_ingest(corpus.manifest_csv, corpus.raw_dir, dir / "store.jsonl",
                  corpus::Article::Format::kVert);

  cli::PipelineConfig pipeline;
  pipeline.store = dir / "store.jsonl";
  pipeline.from = Date{2006, 1, 2};
  pipeline.to = Date{2008, 11, 16};
  pipeline.out_dir = dir / "out";
  pipeline.lexicon_path = corpus.lexicon_csv;
  pipeline.epsilon = 0.5;
  pipeline.breakout_margin = 0.35;
  pipeline.breakout_min_len = 4;
  pipeline.jobs = 4;

  const cli::KlResult result = cli::cmd_kl(pipeline);
  c.expect(!result.breakouts.empty(), "no breakout region detected");
  if (!result.breakouts.empty()) {
    // Jaccard overlap with the scheduled ramp, weeks 30..50 = 2006-W30..W50.
    const WeekId ramp_first{2006, 30}, ramp_last{2006, 50};
    double best = 0.0;
    divergence::WeekInterval best_region = result.breakouts.front();
    for (const auto& region : result.breakouts) {
      const WeekId inter_first = std::max(region.first, ramp_first);
      const WeekId inter_last = std::min(region.last, ramp_last);
      const double inter =
          inter_first <= inter_last
              ? static_cast<double>(week_distance(inter_first, inter_last) + 1)
              : 0.0;
      const WeekId union_first = std::min(region.first, ramp_first);
      const WeekId union_last = std::max(region.last, ramp_last);
      const double uni =
          static_cast<double>(week_distance(union_first, union_last) + 1);
      if (inter / uni > best) {
        best = inter / uni;
        best_region = region;
      }
    }
    std::printf("       breakout %s..%s, Jaccard vs 2006-W30..W50 = %s\n",
                best_region.first.to_string().c_str(),
                best_region.last.to_string().c_str(), fmt(best).c_str());
    c.expect(best >= 0.5, "Jaccard " + fmt(best));
  }

  // Neutral series stays in a band narrower than half the positive peak.
  double neutral_lo = 1e300, neutral_hi = -1e300, positive_peak = 0.0;
  for (const auto& [week, value] : result.neutral.entries) {
    if (!value) continue;
    neutral_lo = std::min(neutral_lo, *value);
    neutral_hi = std::max(neutral_hi, *value);
  }
  for (const auto& [week, value] : result.positive.entries) {
    if (value) positive_peak = std::max(positive_peak, *value);
  }
  const double band = neutral_hi - neutral_lo;
  std::printf("       neutral band = %s, positive peak = %s\n", fmt(band).c_str(),
              fmt(positive_peak).c_str());
  c.expect(band < 0.5 * positive_peak,
           "band " + fmt(band) + " vs peak " + fmt(positive_peak));
}

// ---------------------------------------------------------------------------
// 8. Ingestion invariants on a 200-article fixture.

void criterion_ingestion_invariants(Checker& c) {
  const fs::path dir = work_dir() / "ingestion";
  fs::remove_all(dir);
  fs::create_directories(dir / "raw");

  // 200 articles; every 10th repeats an earlier body -> 20 duplicates.
  std::string manifest = "filename,source,url,date\n";
  const char* sources[] = {"FT", "NYT", "BBC"};
  for (int i = 0; i < 200; ++i) {
    const int body_of = (i % 10 == 9) ? i - 9 : i;
    const std::string body =
        "Markets update number " + std::to_string(body_of) +
        " with enough text that the first fifty characters repeat exactly "
        "when the body number does.";
    const std::string name = "fix" + std::to_string(i) + ".txt";
    std::ofstream(dir / "raw" / name, std::ios::trunc) << body;
    const Date date = Date{2006, 1, 2}.plus_days((i * 3) % 364);
    manifest += name + "," + sources[i % 3] + ",http://x/" + name + "," +
                date.to_string() + "\n";
  }
  std::ofstream(dir / "manifest.csv", std::ios::trunc) << manifest;

  const cli::IngestReport first = cli::cmd_ingest(
      dir / "manifest.csv", dir / "raw", dir / "store.jsonl",
      corpus::Article::Format::kPlain);
  c.expect(first.inserted() == 180, "inserted " + std::to_string(first.inserted()));
  c.expect(first.duplicates() == 20,
           "duplicates " + std::to_string(first.duplicates()));

  // Dedup uniqueness.
  corpus::ArticleStore store =
      corpus::ArticleStore::open(dir / "store.jsonl", false);
  std::set<std::string> keys;
  for (const corpus::Article& a : store.articles()) {
    c.expect(keys.insert(corpus::dedup_key(a)).second, "duplicate key stored");
  }

  // Partition property over the fixture range.
  const corpus::DateRange range{Date{2006, 1, 2}, Date{2007, 1, 1}};
  const auto bins = corpus::bin_by_week(store, range);
  std::size_t binned = 0;
  const WeekId* prev = nullptr;
  for (const auto& [week, ids] : bins) {
    binned += ids.size();
    for (const std::string& id : ids) {
      c.expect(WeekId::of(store.find_id(id)->published_at) == week,
               "article in wrong bin");
    }
    if (prev) c.expect(prev->next() == week, "week axis not contiguous");
    prev = &week;
  }
  std::size_t in_range = 0;
  for (const corpus::Article& a : store.articles()) {
    if (range.contains(a.published_at)) ++in_range;
  }
  c.expect(binned == in_range, "partition lost or duplicated articles");

  // Deterministic re-ingestion: a second pass inserts nothing, and an
  // independent store populated from the same inputs holds identical bodies.
  const cli::IngestReport second = cli::cmd_ingest(
      dir / "manifest.csv", dir / "raw", dir / "store.jsonl",
      corpus::Article::Format::kPlain);
  c.expect(second.inserted() == 0, "re-ingestion inserted articles");
  c.expect(second.duplicates() == 200, "re-ingestion dedup mismatch");

  const cli::IngestReport again = cli::cmd_ingest(
      dir / "manifest.csv", dir / "raw", dir / "store2.jsonl",
      corpus::Article::Format::kPlain);
  c.expect(again.inserted() == 180, "second store differs");
  corpus::ArticleStore store2 =
      corpus::ArticleStore::open(dir / "store2.jsonl", false);
  c.expect(store.size() == store2.size(), "store sizes differ");
  for (const corpus::Article& a : store.articles()) {
    const corpus::Article* b = store2.find_id(a.id);
    c.expect(b != nullptr && b->body == a.body, "bodies differ across ingestions");
  }
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 exact-fit recovery of published constants", 1.0, criterion_exact_fit},
      {"2 sampler-loop recovery vs grid-search oracle", 30.0,
       criterion_sampler_loop},
      {"3 windowed model equals direct-arithmetic oracle", 5.0,
       criterion_window_oracle},
      {"4 symmetric K-L divergence suite", 10.0, criterion_kl_suite},
      {"5 correlation r/p oracle suite", 1.0, criterion_correlation_suite},
      {"6 end-to-end synthetic bubble vs baselines", 300.0,
       criterion_end_to_end_bubble},
      {"7 valency breakout detection", 120.0, criterion_valency_breakout},
      {"8 ingestion invariants on 200-article fixture", 5.0,
       criterion_ingestion_invariants},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    checker.expect(elapsed < criterion.budget_seconds,
                   "runtime " + fmt(elapsed) + "s over budget");
    if (checker.ok) {
      std::printf("[PASS] criterion %s (%.2fs)\n", criterion.name, elapsed);
    } else {
      std::printf("[FAIL] criterion %s (%.2fs): %s\n", criterion.name, elapsed,
                  checker.first_failure.c_str());
      ++failed;
    }
  }
  if (failed) {
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
