#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace debunk {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::year_month_day;

// Fixed UTC offset such as +09:00. Named zones are not supported; a daily
// batch boundary only needs the offset.
struct TzOffset {
  std::chrono::minutes offset{0};

  static TzOffset parse(std::string_view s);  // "+09:00", "-05:30", "Z", "UTC"
  std::string to_string() const;
  friend bool operator==(const TzOffset&, const TzOffset&) = default;
};

// RFC 3339 date-time. Fractional seconds are accepted and truncated.
Timestamp parse_rfc3339(std::string_view s);

// Canonical form: YYYY-MM-DDTHH:MM:SSZ.
std::string format_rfc3339(Timestamp t);

Date parse_date(std::string_view s);  // YYYY-MM-DD
std::string format_date(Date d);

// Calendar day of t as seen at the given offset.
Date local_date(Timestamp t, TzOffset tz);

}  // namespace debunk
