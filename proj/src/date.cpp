#include "zipfsignal/date.hpp"

#include <array>
#include <cstdio>

#include "zipfsignal/errors.hpp"

namespace zipfsignal {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[static_cast<std::size_t>(m - 1)];
}

}  // namespace

bool Date::valid() const {
  return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

// Howard Hinnant's civil-days algorithms.
std::int64_t Date::to_days() const {
  std::int64_t y = year;
  const std::int64_t m = month;
  const std::int64_t d = day;
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const std::int64_t yoe = y - era * 400;                                // [0, 399]
  const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;        // [0, 146096]
  return era * 146097 + doe - 719468;
}

Date Date::from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const std::int64_t doe = z - era * 146097;
  const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = yoe + era * 400;
  const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const std::int64_t mp = (5 * doy + 2) / 153;
  const std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
  const std::int64_t m = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

int Date::iso_weekday() const {
  // 1970-01-01 was a Thursday.
  const std::int64_t z = to_days();
  const std::int64_t wd = (z + 3) % 7;  // 0 = Monday
  return static_cast<int>(wd >= 0 ? wd : wd + 7) + 1;
}

Date Date::parse(std::string_view iso) {
  int y = 0, m = 0, d = 0;
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' ||
      std::sscanf(std::string(iso).c_str(), "%d-%d-%d", &y, &m, &d) != 3) {
    throw DataError("invalid date: '" + std::string(iso) + "' (expected YYYY-MM-DD)");
  }
  Date out{y, m, d};
  if (!out.valid()) {
    throw DataError("invalid calendar date: '" + std::string(iso) + "'");
  }
  return out;
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

WeekId WeekId::of(const Date& d) {
  // The ISO week of a date is the week of its Thursday.
  const Date th = d.plus_days(4 - d.iso_weekday());
  const std::int64_t jan1_days = Date{th.year, 1, 1}.to_days();
  const int doy = static_cast<int>(th.to_days() - jan1_days);  // 0-based
  return WeekId{th.year, doy / 7 + 1};
}

Date WeekId::thursday() const {
  // January 4th always lies in ISO week 1.
  const Date jan4{iso_year, 1, 4};
  const Date week1_thursday = jan4.plus_days(4 - jan4.iso_weekday());
  return week1_thursday.plus_days(7 * static_cast<std::int64_t>(iso_week - 1));
}

WeekId WeekId::next() const { return of(thursday().plus_days(7)); }

WeekId WeekId::prev() const { return of(thursday().plus_days(-7)); }

WeekId WeekId::parse(std::string_view s) {
  int y = 0, w = 0;
  if (s.size() != 8 || s[4] != '-' || s[5] != 'W' ||
      std::sscanf(std::string(s).c_str(), "%d-W%d", &y, &w) != 2 || w < 1 || w > 53) {
    throw DataError("invalid week id: '" + std::string(s) + "' (expected YYYY-Www)");
  }
  WeekId out{y, w};
  if (WeekId::of(out.thursday()) != out) {
    throw DataError("nonexistent ISO week: '" + std::string(s) + "'");
  }
  return out;
}

std::string WeekId::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-W%02d", iso_year, iso_week);
  return buf;
}

std::int64_t week_distance(const WeekId& from, const WeekId& to) {
  return (to.thursday().to_days() - from.thursday().to_days()) / 7;
}

}  // namespace zipfsignal
