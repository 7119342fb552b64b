#include "debunk/timeutil.hpp"

#include <charconv>
#include <cstdio>

#include "debunk/error.hpp"

namespace debunk {
namespace {

int digits(std::string_view s, std::size_t pos, std::size_t n, std::string_view whole) {
  if (pos + n > s.size()) throw Error("truncated timestamp: '" + std::string(whole) + "'");
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pos + n, value);
  if (ec != std::errc{} || ptr != s.data() + pos + n)
    throw Error("bad digits in '" + std::string(whole) + "'");
  return value;
}

void expect(std::string_view s, std::size_t pos, std::string_view any_of, std::string_view whole) {
  if (pos >= s.size() || any_of.find(s[pos]) == std::string_view::npos)
    throw Error("malformed timestamp: '" + std::string(whole) + "'");
}

}  // namespace

TzOffset TzOffset::parse(std::string_view s) {
  if (s == "Z" || s == "z" || s == "UTC" || s == "utc") return {};
  if (s.size() != 6 || (s[0] != '+' && s[0] != '-') || s[3] != ':')
    throw Error("timezone offset must look like +HH:MM, got '" + std::string(s) + "'");
  int h = digits(s, 1, 2, s);
  int m = digits(s, 4, 2, s);
  if (h > 23 || m > 59) throw Error("timezone offset out of range: '" + std::string(s) + "'");
  std::chrono::minutes off{h * 60 + m};
  return TzOffset{s[0] == '-' ? -off : off};
}

std::string TzOffset::to_string() const {
  auto total = offset.count();
  char sign = total < 0 ? '-' : '+';
  if (total < 0) total = -total;
  char buf[8];
  std::snprintf(buf, sizeof buf, "%c%02d:%02d", sign, static_cast<int>(total / 60),
                static_cast<int>(total % 60));
  return buf;
}

Date parse_date(std::string_view s) {
  if (s.size() != 10) throw Error("date must be YYYY-MM-DD, got '" + std::string(s) + "'");
  expect(s, 4, "-", s);
  expect(s, 7, "-", s);
  Date d{std::chrono::year{digits(s, 0, 4, s)},
         std::chrono::month{static_cast<unsigned>(digits(s, 5, 2, s))},
         std::chrono::day{static_cast<unsigned>(digits(s, 8, 2, s))}};
  if (!d.ok()) throw Error("invalid calendar date '" + std::string(s) + "'");
  return d;
}

std::string format_date(Date d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

Timestamp parse_rfc3339(std::string_view s) {
  using namespace std::chrono;
  if (s.size() < 20) throw Error("malformed timestamp: '" + std::string(s) + "'");
  Date d = parse_date(s.substr(0, 10));
  expect(s, 10, "Tt ", s);
  int hh = digits(s, 11, 2, s);
  expect(s, 13, ":", s);
  int mm = digits(s, 14, 2, s);
  expect(s, 16, ":", s);
  int ss = digits(s, 17, 2, s);
  if (hh > 23 || mm > 59 || ss > 60) throw Error("time out of range: '" + std::string(s) + "'");
  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t frac_start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == frac_start) throw Error("empty fraction in '" + std::string(s) + "'");
  }
  if (pos >= s.size()) throw Error("timestamp missing offset: '" + std::string(s) + "'");
  TzOffset tz = TzOffset::parse(s.substr(pos));
  Timestamp local = sys_days{d} + hours{hh} + minutes{mm} + seconds{ss};
  return local - tz.offset;
}

std::string format_rfc3339(Timestamp t) {
  using namespace std::chrono;
  auto day = floor<days>(t);
  Date d{day};
  auto rem = t - day;
  auto h = duration_cast<hours>(rem);
  rem -= h;
  auto m = duration_cast<minutes>(rem);
  rem -= m;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", format_date(d).c_str(),
                static_cast<int>(h.count()), static_cast<int>(m.count()),
                static_cast<int>(rem.count()));
  return buf;
}

Date local_date(Timestamp t, TzOffset tz) {
  return Date{std::chrono::floor<std::chrono::days>(t + tz.offset)};
}

}  // namespace debunk
