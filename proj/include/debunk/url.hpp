#pragma once

#include <string>
#include <string_view>

namespace debunk {

// Canonical form used to compare URLs without fetching them: lowercase scheme
// and host, default port dropped, fragment removed, tracking parameters
// (utm_*, fbclid, gclid, igshid, mc_cid, mc_eid, ref_src, ref_url, s, t)
// removed, empty path written as "/". Strings that do not look like
// scheme://host URLs are returned trimmed and otherwise unchanged.
std::string normalize_url(std::string_view url);

}  // namespace debunk
