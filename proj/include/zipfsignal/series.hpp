#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "zipfsignal/date.hpp"

namespace zipfsignal {

// An ordered map from ISO week to an optional value. Weeks with no value
// (no articles, or insufficient window context) are present but missing, so
// series keep contiguous week axes.
struct WeeklySeries {
  std::string label;
  std::map<WeekId, std::optional<double>> entries;

  void set(const WeekId& week, std::optional<double> value) {
    entries[week] = value;
  }

  // nullopt both for missing values and weeks outside the series.
  std::optional<double> at(const WeekId& week) const {
    const auto it = entries.find(week);
    return it == entries.end() ? std::nullopt : it->second;
  }

  std::size_t defined_count() const;

  // True when consecutive entries are consecutive ISO weeks.
  bool contiguous() const;

  // CSV: header "week,value", one row per week, missing = empty field.
  void write_csv(const std::filesystem::path& path) const;
  static WeeklySeries read_csv(const std::filesystem::path& path,
                               std::string label = "");
};

}  // namespace zipfsignal
