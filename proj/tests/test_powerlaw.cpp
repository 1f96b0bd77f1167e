#include <cmath>

#include "doctest.h"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/powerlaw.hpp"
#include "zipfsignal/rng.hpp"

using namespace zipfsignal;
using namespace zipfsignal::powerlaw;
using lingproc::PhraseCounts;

namespace {

RankFrequencyDistribution noiseless(double c, double alpha, int n) {
  RankFrequencyDistribution dist;
  for (int r = 1; r <= n; ++r) {
    dist.points.emplace_back(r, std::exp(c) * std::pow(r, -alpha));
  }
  return dist;
}

double sum_squared_residuals(const RankFrequencyDistribution& dist, double alpha,
                             double c) {
  double ss = 0.0;
  for (const auto& [rank, freq] : dist.points) {
    const double pred = c - alpha * std::log(static_cast<double>(rank));
    const double err = std::log(freq) - pred;
    ss += err * err;
  }
  return ss;
}

// Exhaustive grid search minimizing the same log-log least squares, used as
// an independent oracle for the closed-form estimator.
double grid_search_alpha(const RankFrequencyDistribution& dist, double lo,
                         double hi, double step) {
  double best_alpha = lo, best_ss = 1e300;
  for (double alpha = lo; alpha <= hi + 1e-12; alpha += step) {
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [rank, freq] : dist.points) {
      mean_x += std::log(static_cast<double>(rank));
      mean_y += std::log(freq);
    }
    mean_x /= static_cast<double>(dist.size());
    mean_y /= static_cast<double>(dist.size());
    const double c = mean_y + alpha * mean_x;
    const double ss = sum_squared_residuals(dist, alpha, c);
    if (ss < best_ss) {
      best_ss = ss;
      best_alpha = alpha;
    }
  }
  return best_alpha;
}

}  // namespace

TEST_CASE("rank_frequency: ordering and ties") {
  PhraseCounts counts;
  counts.add("a", 5);
  counts.add("b", 3);
  counts.add("c", 1);
  const auto dist = rank_frequency(counts);
  REQUIRE(dist.size() == 3);
  CHECK(dist.points[0] == std::pair<std::uint32_t, double>{1, 5.0});
  CHECK(dist.points[1] == std::pair<std::uint32_t, double>{2, 3.0});
  CHECK(dist.points[2] == std::pair<std::uint32_t, double>{3, 1.0});

  PhraseCounts tied;
  tied.add("b", 2);
  tied.add("a", 2);
  const auto tie_dist = rank_frequency(tied);
  // Ties break by ascending key, so "a" takes rank 1.
  CHECK(tie_dist.points[0].second == 2.0);
  CHECK(tie_dist.points[1].second == 2.0);

  PhraseCounts empty;
  CHECK_THROWS_AS(rank_frequency(empty), NumericError);
}

TEST_CASE("rank_frequency: 1367-key synthetic map has gapless monotone ranks") {
  // 1,367 is the paper's mean weekly unique-verb count.
  SplitMix64 rng(5);
  PhraseCounts counts;
  for (int i = 0; i < 1367; ++i) {
    counts.add("w" + std::to_string(i), 1 + rng.next_below(5000));
  }
  const auto dist = rank_frequency(counts);
  REQUIRE(dist.size() == 1367);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    CHECK(dist.points[i].first == i + 1);
    if (i) CHECK(dist.points[i].second <= dist.points[i - 1].second);
  }
}

TEST_CASE("fit_power_law: recovers the published corpus constants exactly") {
  // Verb-phrase constants.
  const auto fit3 = fit_power_law(noiseless(10.8407, 0.8137, 500));
  CHECK(std::fabs(fit3.alpha - 0.8137) < 1e-9);
  CHECK(std::fabs(fit3.c - 10.8407) < 1e-9);
  CHECK(fit3.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit3.n_points == 500);

  // Noun-phrase constants.
  const auto fit4 = fit_power_law(noiseless(9.9224, 0.7299, 500));
  CHECK(std::fabs(fit4.alpha - 0.7299) < 1e-9);
  CHECK(std::fabs(fit4.c - 9.9224) < 1e-9);
  CHECK(fit4.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_power_law: exact recovery across the parameter range") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const double alpha = 0.1 + 2.9 * rng.next_double();
    const double c = -2.0 + 10.0 * rng.next_double();
    const int n = 10 + static_cast<int>(rng.next_below(9991));
    CAPTURE(alpha);
    CAPTURE(c);
    CAPTURE(n);
    const auto fit = fit_power_law(noiseless(c, alpha, n));
    CHECK(std::fabs(fit.alpha - alpha) < 1e-9);
    CHECK(std::fabs(fit.c - c) < 1e-9);
    CHECK(fit.r_squared > 1.0 - 1e-12);
  }
}

TEST_CASE("fit_power_law: scale covariance") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    PhraseCounts counts;
    for (int i = 0; i < 50; ++i) counts.add("k" + std::to_string(i), 1 + rng.next_below(1000));
    const auto dist = rank_frequency(counts);
    const double k = 0.1 + 10.0 * rng.next_double();
    RankFrequencyDistribution scaled = dist;
    for (auto& [rank, freq] : scaled.points) freq *= k;

    const auto base = fit_power_law(dist);
    const auto shifted = fit_power_law(scaled);
    CHECK(shifted.alpha == doctest::Approx(base.alpha).epsilon(1e-10));
    CHECK(shifted.c == doctest::Approx(base.c + std::log(k)).epsilon(1e-10));
  }
}

TEST_CASE("fit_power_law: residual optimality of the fitted parameters") {
  SplitMix64 rng(31);
  PhraseCounts counts;
  for (int i = 0; i < 200; ++i) counts.add("k" + std::to_string(i), 1 + rng.next_below(5000));
  const auto dist = rank_frequency(counts);
  const auto fit = fit_power_law(dist);
  const double best = sum_squared_residuals(dist, fit.alpha, fit.c);
  for (const double da : {-1e-3, 0.0, 1e-3}) {
    for (const double dc : {-1e-3, 0.0, 1e-3}) {
      if (da == 0.0 && dc == 0.0) continue;
      CHECK(sum_squared_residuals(dist, fit.alpha + da, fit.c + dc) >= best);
    }
  }
}

TEST_CASE("fit_power_law: input order does not matter") {
  PhraseCounts forward, backward;
  for (int i = 0; i < 40; ++i) {
    forward.add("k" + std::to_string(i), static_cast<std::uint64_t>(1000 / (i + 1)));
  }
  for (int i = 39; i >= 0; --i) {
    backward.add("k" + std::to_string(i), static_cast<std::uint64_t>(1000 / (i + 1)));
  }
  const auto a = fit_power_law(rank_frequency(forward));
  const auto b = fit_power_law(rank_frequency(backward));
  CHECK(a.alpha == b.alpha);
  CHECK(a.c == b.c);
}

TEST_CASE("fit_power_law: fixed intercept mode") {
  const auto dist = noiseless(10.0, 0.9, 300);
  FitOptions options;
  options.mode = FitMode::kFixedIntercept;
  options.fixed_c = 10.0;
  const auto fit = fit_power_law(dist, options);
  CHECK(std::fabs(fit.alpha - 0.9) < 1e-9);
  CHECK(fit.c == 10.0);

  // Direct evaluation of alpha = sum x(c0 - y) / sum x^2.
  options.fixed_c = 10.5;
  const auto off = fit_power_law(dist, options);
  double num = 0.0, den = 0.0;
  for (const auto& [rank, freq] : dist.points) {
    const double x = std::log(static_cast<double>(rank));
    num += x * (10.5 - std::log(freq));
    den += x * x;
  }
  CHECK(off.alpha == doctest::Approx(num / den).epsilon(1e-12));
  CHECK(off.r_squared >= 0.0);
  CHECK(off.r_squared <= 1.0);
}

TEST_CASE("fit_power_law: errors") {
  RankFrequencyDistribution two;
  two.points = {{1, 10.0}, {2, 5.0}};
  CHECK_THROWS_AS(fit_power_law(two), NumericError);

  RankFrequencyDistribution zero;
  zero.points = {{1, 10.0}, {2, 5.0}, {3, 0.0}};
  CHECK_THROWS_AS(fit_power_law(zero), NumericError);

  // max_rank truncation keeps only the head.
  const auto dist = noiseless(5.0, 1.0, 100);
  FitOptions options;
  options.max_rank = 10;
  CHECK(fit_power_law(dist, options).n_points == 10);
}

TEST_CASE("sample_zipf: normalization, determinism, parameter errors") {
  // vocab 2: P = (2/3, 1/3).
  const auto counts = sample_zipf(1.0, 2, 100000, 99);
  const double first = static_cast<double>(counts.counts.at("w0001"));
  const double ratio = first / 100000.0;
  CHECK(ratio == doctest::Approx(2.0 / 3.0).epsilon(0.02));

  const auto again = sample_zipf(1.0, 2, 100000, 99);
  CHECK(again.counts == counts.counts);
  const auto other_seed = sample_zipf(1.0, 2, 100000, 100);
  CHECK(other_seed.counts != counts.counts);

  CHECK_THROWS_AS(sample_zipf(0.0, 10, 10, 1), NumericError);
  CHECK_THROWS_AS(sample_zipf(1.0, 1, 10, 1), NumericError);
  CHECK_THROWS_AS(sample_zipf(1.0, 10, 0, 1), NumericError);
}

TEST_CASE("sample_zipf: refit recovers the sampling exponent") {
  const auto counts = sample_zipf(1.0, 1000, 1000000, 12345);
  const auto fit = fit_power_law(rank_frequency(counts));
  CHECK(fit.alpha > 0.9);
  CHECK(fit.alpha < 1.1);
}

TEST_CASE("fit_power_law agrees with the grid-search oracle on sampled data") {
  const auto counts = sample_zipf(1.0, 500, 100000, 7);
  const auto dist = rank_frequency(counts);
  const auto fit = fit_power_law(dist);
  const double oracle = grid_search_alpha(dist, 0.5, 1.5, 1e-4);
  CHECK(std::fabs(fit.alpha - oracle) <= 1e-3);
}

TEST_CASE("fit_alpha_mle: diagnostic estimator is in the right neighborhood") {
  const auto counts = sample_zipf(1.2, 800, 500000, 21);
  const double mle = fit_alpha_mle(rank_frequency(counts));
  CHECK(mle > 1.15);
  CHECK(mle < 1.25);
}
