#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace zipfsignal {

// Proleptic Gregorian calendar date. All dates are UTC; the library never
// touches local time.
struct Date {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  bool valid() const;

  // Days since 1970-01-01 (negative before the epoch).
  std::int64_t to_days() const;
  static Date from_days(std::int64_t days);

  Date plus_days(std::int64_t n) const { return from_days(to_days() + n); }

  // ISO weekday: 1 = Monday .. 7 = Sunday.
  int iso_weekday() const;

  // "YYYY-MM-DD". parse() throws DataError on malformed or invalid dates.
  static Date parse(std::string_view iso);
  std::string to_string() const;

  auto operator<=>(const Date&) const = default;
};

// An ISO-8601 week (Monday..Sunday). Totally ordered by (iso_year, iso_week).
struct WeekId {
  int iso_year = 1970;
  int iso_week = 1;  // 1..53

  static WeekId of(const Date& d);

  // The Thursday that anchors this ISO week.
  Date thursday() const;
  Date monday() const { return thursday().plus_days(-3); }
  Date sunday() const { return thursday().plus_days(3); }

  WeekId next() const;
  WeekId prev() const;

  // "YYYY-Www", e.g. "2007-W42". parse() throws DataError.
  static WeekId parse(std::string_view s);
  std::string to_string() const;

  auto operator<=>(const WeekId&) const = default;
};

// Signed number of ISO weeks from `from` to `to` (0 when equal).
std::int64_t week_distance(const WeekId& from, const WeekId& to);

}  // namespace zipfsignal
