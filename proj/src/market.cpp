#include "zipfsignal/market.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "zipfsignal/csv.hpp"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/stats.hpp"

namespace zipfsignal::market {

IndexSeries load_index_csv(const std::filesystem::path& path, std::string symbol) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open index CSV: " + path.string());
  IndexSeries series;
  series.symbol = symbol.empty() ? path.stem().string() : std::move(symbol);

  csvio::Reader reader(in);
  std::vector<std::string> row;
  bool first = true;
  std::set<Date> seen;
  while (reader.next(row)) {
    if (first && !row.empty() && row[0] == "date") {
      first = false;
      continue;
    }
    first = false;
    if (row.size() != 2) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": expected date,close");
    }
    Date date;
    double close;
    try {
      date = Date::parse(row[0]);
      close = std::stod(row[1]);
    } catch (const std::exception& e) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": " + e.what());
    }
    if (!(close > 0.0)) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": non-positive close " + row[1]);
    }
    if (!seen.insert(date).second) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": duplicate date " + row[0]);
    }
    series.observations.emplace_back(date, close);
  }
  std::sort(series.observations.begin(), series.observations.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return series;
}

WeeklySeries weekly_close(const IndexSeries& series) {
  if (series.observations.empty()) {
    throw DataError("weekly_close: empty index series");
  }
  WeeklySeries out;
  out.label = series.symbol + "_weekly_close";
  const WeekId first = WeekId::of(series.observations.front().first);
  const WeekId last = WeekId::of(series.observations.back().first);
  for (WeekId w = first; w <= last; w = w.next()) {
    out.set(w, std::nullopt);
  }
  // Observations are sorted, so the last write per week is the latest date.
  for (const auto& [date, close] : series.observations) {
    out.set(WeekId::of(date), close);
  }
  return out;
}

AlignedPair align(const WeeklySeries& a, const WeeklySeries& b) {
  AlignedPair out;
  for (const auto& [week, value_a] : a.entries) {
    if (!value_a) continue;
    const std::optional<double> value_b = b.at(week);
    if (!value_b) continue;
    out.weeks.push_back(week);
    out.a.push_back(*value_a);
    out.b.push_back(*value_b);
  }
  if (out.size() < 3) {
    throw DataError("insufficient overlap: " + std::to_string(out.size()) +
                    " paired weeks between '" + a.label + "' and '" + b.label +
                    "' (need >= 3)");
  }
  return out;
}

CorrelationReport pearson(std::span<const double> x, std::span<const double> y,
                          Tail tail) {
  if (x.size() != y.size()) throw NumericError("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n < 3) throw NumericError("pearson: need at least 3 pairs");

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) {
    throw NumericError("pearson: degenerate input (zero variance)");
  }

  CorrelationReport report;
  report.n = static_cast<int>(n);
  report.df = report.n - 2;
  report.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);

  if (std::fabs(report.r) >= 1.0) {
    report.t_stat = report.r > 0 ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
  } else {
    report.t_stat = report.r * std::sqrt(static_cast<double>(report.df) /
                                         (1.0 - report.r * report.r));
  }
  report.p_one_tailed = tail == Tail::kPositive
                            ? stats::student_t_sf(report.t_stat, report.df)
                            : stats::student_t_cdf(report.t_stat, report.df);
  return report;
}

WeeklySeries week_over_week_diff(const WeeklySeries& s) {
  WeeklySeries out;
  out.label = s.label + "_diff";
  std::optional<WeekId> prev_week;
  std::optional<double> prev_value;
  for (const auto& [week, value] : s.entries) {
    std::optional<double> diff;
    if (value && prev_value && prev_week && prev_week->next() == week) {
      diff = *value - *prev_value;
    }
    out.set(week, diff);
    prev_week = week;
    prev_value = value;
  }
  return out;
}

}  // namespace zipfsignal::market
