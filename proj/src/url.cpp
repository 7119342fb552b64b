#include "debunk/url.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace debunk {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_tracking(std::string_view key) {
  auto k = lower(key);
  if (k.rfind("utm_", 0) == 0) return true;
  static const char* const kKeys[] = {"fbclid", "gclid", "igshid", "mc_cid", "mc_eid",
                                      "ref_src", "ref_url", "s", "t"};
  for (const char* t : kKeys)
    if (k == t) return true;
  return false;
}

}  // namespace

std::string normalize_url(std::string_view url) {
  while (!url.empty() && std::isspace(static_cast<unsigned char>(url.front()))) url.remove_prefix(1);
  while (!url.empty() && std::isspace(static_cast<unsigned char>(url.back()))) url.remove_suffix(1);
  auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos || scheme_end == 0) return std::string(url);
  std::string scheme = lower(url.substr(0, scheme_end));
  std::string_view rest = url.substr(scheme_end + 3);

  if (auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
  auto path_start = rest.find_first_of("/?");
  std::string_view authority = rest.substr(0, path_start);
  std::string_view tail = path_start == std::string_view::npos ? "" : rest.substr(path_start);

  std::string host = lower(authority);
  if (auto at = host.rfind('@'); at != std::string::npos) host = host.substr(at + 1);
  if ((scheme == "http" && host.size() > 3 && host.ends_with(":80")) ||
      (scheme == "https" && host.size() > 4 && host.ends_with(":443")))
    host = host.substr(0, host.rfind(':'));

  std::string_view path = tail, query;
  if (auto q = tail.find('?'); q != std::string_view::npos) {
    path = tail.substr(0, q);
    query = tail.substr(q + 1);
  }
  std::string out = scheme + "://" + host + (path.empty() ? "/" : std::string(path));

  std::vector<std::string_view> kept;
  std::size_t start = 0;
  while (start <= query.size() && !query.empty()) {
    auto amp = query.find('&', start);
    auto item = query.substr(start, amp == std::string_view::npos ? std::string_view::npos : amp - start);
    if (!item.empty() && !is_tracking(item.substr(0, item.find('=')))) kept.push_back(item);
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out += i == 0 ? '?' : '&';
    out += kept[i];
  }
  return out;
}

}  // namespace debunk
