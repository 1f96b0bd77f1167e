#include "zipfsignal/series.hpp"

#include <cstdio>
#include <fstream>

#include "zipfsignal/csv.hpp"
#include "zipfsignal/errors.hpp"

namespace zipfsignal {

std::size_t WeeklySeries::defined_count() const {
  std::size_t n = 0;
  for (const auto& [week, value] : entries) {
    if (value) ++n;
  }
  return n;
}

bool WeeklySeries::contiguous() const {
  const WeekId* prev = nullptr;
  for (const auto& [week, value] : entries) {
    if (prev && prev->next() != week) return false;
    prev = &week;
  }
  return true;
}

void WeeklySeries::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write series CSV: " + path.string());
  out << "week,value\n";
  char buf[64];
  for (const auto& [week, value] : entries) {
    if (value) {
      std::snprintf(buf, sizeof(buf), "%.12g", *value);
      out << week.to_string() << ',' << buf << '\n';
    } else {
      out << week.to_string() << ",\n";
    }
  }
  if (!out) throw DataError("I/O failure writing: " + path.string());
}

WeeklySeries WeeklySeries::read_csv(const std::filesystem::path& path,
                                    std::string label) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open series CSV: " + path.string());
  WeeklySeries series;
  series.label = label.empty() ? path.stem().string() : std::move(label);

  csvio::Reader reader(in);
  std::vector<std::string> row;
  bool first = true;
  while (reader.next(row)) {
    if (first && !row.empty() && row[0] == "week") {
      first = false;
      continue;
    }
    first = false;
    if (row.size() != 2) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": expected week,value");
    }
    const WeekId week = WeekId::parse(row[0]);
    if (series.entries.count(week)) {
      throw DataError(path.string() + " line " + std::to_string(reader.line_no()) +
                      ": duplicate week " + row[0]);
    }
    if (row[1].empty()) {
      series.entries[week] = std::nullopt;
    } else {
      try {
        series.entries[week] = std::stod(row[1]);
      } catch (const std::exception&) {
        throw DataError(path.string() + " line " +
                        std::to_string(reader.line_no()) + ": bad value '" +
                        row[1] + "'");
      }
    }
  }
  return series;
}

}  // namespace zipfsignal
