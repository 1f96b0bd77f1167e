#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zipfsignal/date.hpp"
#include "zipfsignal/series.hpp"

namespace zipfsignal::market {

// A stock-index price history: strictly increasing dates, closes > 0.
struct IndexSeries {
  std::string symbol;
  std::vector<std::pair<Date, double>> observations;
};

// CSV with a "date,close" header and ISO-8601 dates. Rows may arrive in any
// order; the result is sorted. Throws DataError on unparsable rows,
// non-positive closes and duplicate dates. The symbol defaults to the file
// stem.
IndexSeries load_index_csv(const std::filesystem::path& path,
                           std::string symbol = "");

// Weekly closing level: the close of the last trading date inside each ISO
// week. Weeks between the first and last observation with no observations
// are present but missing.
WeeklySeries weekly_close(const IndexSeries& series);

// Chronological pairing of the weeks where both series have values.
struct AlignedPair {
  std::vector<WeekId> weeks;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t size() const { return weeks.size(); }
};

// Throws DataError when fewer than 3 weeks overlap.
AlignedPair align(const WeeklySeries& a, const WeeklySeries& b);

enum class Tail { kPositive, kNegative };

struct CorrelationReport {
  double r = 0.0;
  int n = 0;
  double t_stat = 0.0;
  int df = 0;
  double p_one_tailed = 1.0;
};

// Sample Pearson correlation with a one-tailed p-value from the Student-t
// distribution with n-2 degrees of freedom. Requires n >= 3 and nonzero
// variance in both vectors (NumericError otherwise).
CorrelationReport pearson(std::span<const double> x, std::span<const double> y,
                          Tail tail);

// Optional transform: week-over-week differences (value_i - value_{i-1});
// the first week and any week after a missing one are missing. This is an
// extension beyond the published levels-based correlations.
WeeklySeries week_over_week_diff(const WeeklySeries& s);

}  // namespace zipfsignal::market
