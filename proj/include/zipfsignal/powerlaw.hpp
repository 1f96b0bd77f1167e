#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "zipfsignal/phrase_counts.hpp"

namespace zipfsignal::powerlaw {

// Rank-frequency points: ranks are exactly 1..n, frequencies non-increasing.
struct RankFrequencyDistribution {
  std::vector<std::pair<std::uint32_t, double>> points;

  std::size_t size() const { return points.size(); }
};

enum class FitMode { kFreeIntercept, kFixedIntercept };

struct FitOptions {
  FitMode mode = FitMode::kFreeIntercept;
  double fixed_c = 0.0;       // intercept to hold when mode == kFixedIntercept
  std::uint32_t max_rank = 0;  // 0 = use all ranks; otherwise truncate the tail
};

// Least-squares fit of ln(frequency) on ln(rank): frequency = e^c * rank^-alpha.
struct PowerLawFit {
  double alpha = 0.0;
  double c = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
  FitMode mode = FitMode::kFreeIntercept;

  std::string mode_name() const {
    return mode == FitMode::kFreeIntercept ? "free" : "fixed";
  }
};

// Sorts keys by descending count, ties broken by ascending key, and assigns
// ranks 1..n. Throws NumericError on empty counts.
RankFrequencyDistribution rank_frequency(const lingproc::PhraseCounts& counts);

// Ordinary least squares in log-log space. Under kFixedIntercept only alpha
// is estimated, holding c at options.fixed_c. Requires n >= 3 points and all
// frequencies > 0; throws NumericError otherwise.
PowerLawFit fit_power_law(const RankFrequencyDistribution& dist,
                          const FitOptions& options = {});

// Maximum-likelihood exponent for a Zipf distribution over ranks, treating
// the frequencies as multinomial counts with P(r) proportional to r^-alpha.
// Diagnostic only; the regression fit above is the primary estimator.
double fit_alpha_mle(const RankFrequencyDistribution& dist);

// Draws n_tokens i.i.d. from P(rank r) proportional to r^-alpha over
// r = 1..vocab_size, using SplitMix64 seeded with `seed`. Keys are "w0001",
// "w0002", ... zero-padded to the width of vocab_size (minimum 4 digits).
lingproc::PhraseCounts sample_zipf(double alpha, int vocab_size,
                                   std::int64_t n_tokens, std::uint64_t seed);

// CSV export: "rank,frequency" rows for the distribution; the fit record is
// a single "alpha,c,r_squared,n,mode" row.
void write_distribution_csv(const std::filesystem::path& path,
                            const RankFrequencyDistribution& dist);
void write_fit_csv(const std::filesystem::path& path, const PowerLawFit& fit);

}  // namespace zipfsignal::powerlaw
