#include "zipfsignal/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "zipfsignal/errors.hpp"
#include "zipfsignal/rng.hpp"

namespace zipfsignal::powerlaw {

RankFrequencyDistribution rank_frequency(const lingproc::PhraseCounts& counts) {
  if (counts.empty()) throw NumericError("rank_frequency: empty counts");

  // counts.counts iterates in ascending key order, so a stable sort by
  // descending count preserves the lexicographic tie order.
  std::vector<std::pair<std::string_view, std::uint64_t>> items;
  items.reserve(counts.counts.size());
  for (const auto& [key, n] : counts.counts) items.emplace_back(key, n);
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  RankFrequencyDistribution dist;
  dist.points.reserve(items.size());
  std::uint32_t rank = 1;
  for (const auto& [key, n] : items) {
    dist.points.emplace_back(rank++, static_cast<double>(n));
  }
  return dist;
}

PowerLawFit fit_power_law(const RankFrequencyDistribution& dist,
                          const FitOptions& options) {
  std::vector<double> xs, ys;
  xs.reserve(dist.points.size());
  ys.reserve(dist.points.size());
  for (const auto& [rank, freq] : dist.points) {
    if (options.max_rank != 0 && rank > options.max_rank) break;
    if (!(freq > 0.0)) {
      throw NumericError("fit_power_law: non-positive frequency at rank " +
                         std::to_string(rank));
    }
    xs.push_back(std::log(static_cast<double>(rank)));
    ys.push_back(std::log(freq));
  }
  const std::size_t n = xs.size();
  if (n < 3) {
    throw NumericError("fit_power_law: need at least 3 points, have " +
                       std::to_string(n));
  }

  PowerLawFit fit;
  fit.n_points = static_cast<int>(n);
  fit.mode = options.mode;

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  if (options.mode == FitMode::kFreeIntercept) {
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
      sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    if (sxx <= 0.0) throw NumericError("fit_power_law: zero variance in log-rank");
    const double slope = sxy / sxx;
    fit.alpha = -slope;
    fit.c = mean_y - slope * mean_x;
  } else {
    // alpha = sum x_i (c0 - y_i) / sum x_i^2, minimizing sum (y - (c0 - a x))^2.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += xs[i] * (options.fixed_c - ys[i]);
      den += xs[i] * xs[i];
    }
    if (den <= 0.0) throw NumericError("fit_power_law: zero variance in log-rank");
    fit.alpha = num / den;
    fit.c = options.fixed_c;
  }

  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = fit.c - fit.alpha * xs[i];
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  if (ss_tot <= 0.0) {
    fit.r_squared = ss_res <= 1e-300 ? 1.0 : 0.0;
  } else {
    fit.r_squared = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  }
  return fit;
}

double fit_alpha_mle(const RankFrequencyDistribution& dist) {
  if (dist.points.size() < 2) {
    throw NumericError("fit_alpha_mle: need at least 2 ranks");
  }
  // The log-likelihood is concave in alpha, so its derivative
  //   -sum n_r ln r + N * E_alpha[ln r]
  // is monotone decreasing and bisection finds the root.
  const std::size_t n = dist.points.size();
  std::vector<double> log_rank(n);
  double total = 0.0, observed_log_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    log_rank[i] = std::log(static_cast<double>(dist.points[i].first));
    total += dist.points[i].second;
    observed_log_sum += dist.points[i].second * log_rank[i];
  }

  const auto derivative = [&](double alpha) {
    double z = 0.0, z_log = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = std::exp(-alpha * log_rank[i]);
      z += w;
      z_log += w * log_rank[i];
    }
    return -observed_log_sum + total * z_log / z;
  };

  double lo = 1e-9, hi = 20.0;
  if (derivative(lo) <= 0.0) return lo;
  if (derivative(hi) >= 0.0) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (derivative(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12) break;
  }
  return 0.5 * (lo + hi);
}

lingproc::PhraseCounts sample_zipf(double alpha, int vocab_size,
                                   std::int64_t n_tokens, std::uint64_t seed) {
  if (!(alpha > 0.0)) throw NumericError("sample_zipf: alpha must be > 0");
  if (vocab_size < 2) throw NumericError("sample_zipf: vocab_size must be >= 2");
  if (n_tokens < 1) throw NumericError("sample_zipf: n_tokens must be >= 1");

  std::vector<double> cumulative(static_cast<std::size_t>(vocab_size));
  double sum = 0.0;
  for (int r = 1; r <= vocab_size; ++r) {
    sum += std::pow(static_cast<double>(r), -alpha);
    cumulative[static_cast<std::size_t>(r - 1)] = sum;
  }

  std::vector<std::uint64_t> hits(static_cast<std::size_t>(vocab_size), 0);
  SplitMix64 rng(seed);
  for (std::int64_t i = 0; i < n_tokens; ++i) {
    const double u = rng.next_double() * sum;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx =
        std::min(static_cast<std::size_t>(it - cumulative.begin()),
                 cumulative.size() - 1);
    ++hits[idx];
  }

  int width = 1;
  for (int v = vocab_size; v >= 10; v /= 10) ++width;
  width = std::clamp(width, 4, 10);

  lingproc::PhraseCounts counts;
  counts.kind = lingproc::PhraseKind::kVerbLemma;
  char buf[32];
  for (int r = 1; r <= vocab_size; ++r) {
    const std::uint64_t n = hits[static_cast<std::size_t>(r - 1)];
    if (n == 0) continue;
    std::snprintf(buf, sizeof(buf), "w%0*d", width, r);
    counts.counts.emplace(buf, n);
  }
  return counts;
}

void write_distribution_csv(const std::filesystem::path& path,
                            const RankFrequencyDistribution& dist) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write: " + path.string());
  out << "rank,frequency\n";
  char buf[64];
  for (const auto& [rank, freq] : dist.points) {
    std::snprintf(buf, sizeof(buf), "%u,%.12g\n", rank, freq);
    out << buf;
  }
}

void write_fit_csv(const std::filesystem::path& path, const PowerLawFit& fit) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write: " + path.string());
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%d,%s\n", fit.alpha, fit.c,
                fit.r_squared, fit.n_points, fit.mode_name().c_str());
  out << "alpha,c,r_squared,n,mode\n" << buf;
}

}  // namespace zipfsignal::powerlaw
