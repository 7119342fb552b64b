#include "debunk/corpus.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <nlohmann/json.hpp>
#include <unordered_set>

#include "debunk/error.hpp"

namespace debunk {
namespace {

using ordered_json = nlohmann::ordered_json;

const ordered_json& field(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_string()) throw Error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t count_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw Error(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::optional<std::string> optional_id(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string() || it->get<std::string>().empty())
    throw Error(std::string("field '") + key + "' must be a non-empty string or null");
  return it->get<std::string>();
}

}  // namespace

const std::set<std::string>& default_languages() {
  static const std::set<std::string> langs{"en", "ja"};
  return langs;
}

std::string serialize_tweet(const Tweet& t) {
  ordered_json j;
  j["id"] = t.id;
  j["lang"] = t.lang;
  j["text"] = t.text;
  j["created_at"] = format_rfc3339(t.created_at);
  j["share_count"] = t.share_count;
  j["like_count"] = t.like_count;
  j["urls"] = t.urls;
  j["reply_to_id"] = t.reply_to_id ? ordered_json(*t.reply_to_id) : ordered_json(nullptr);
  j["quote_of_id"] = t.quote_of_id ? ordered_json(*t.quote_of_id) : ordered_json(nullptr);
  j["retweeter_count"] = t.retweeter_count;
  j["follower_retweeter_count"] = t.follower_retweeter_count;
  j["author_verified"] = t.author_verified;
  return j.dump();
}

namespace {

Tweet tweet_from_json(const ordered_json& j, const std::set<std::string>& languages) {
  if (!j.is_object()) throw Error("record is not an object");
  Tweet t;
  t.id = string_field(j, "id");
  if (t.id.empty()) throw Error("empty id");
  t.lang = string_field(j, "lang");
  if (!languages.empty() && !languages.count(t.lang)) throw Error("unsupported language '" + t.lang + "'");
  t.text = string_field(j, "text");
  t.created_at = parse_rfc3339(string_field(j, "created_at"));
  t.share_count = count_field(j, "share_count");
  t.like_count = count_field(j, "like_count");
  const auto& urls = field(j, "urls");
  if (!urls.is_array()) throw Error("field 'urls' must be an array");
  for (const auto& u : urls) {
    if (!u.is_string()) throw Error("field 'urls' must hold strings");
    t.urls.push_back(u.get<std::string>());
  }
  t.reply_to_id = optional_id(j, "reply_to_id");
  t.quote_of_id = optional_id(j, "quote_of_id");
  t.retweeter_count = count_field(j, "retweeter_count");
  t.follower_retweeter_count = count_field(j, "follower_retweeter_count");
  const auto& verified = field(j, "author_verified");
  if (!verified.is_boolean()) throw Error("field 'author_verified' must be a boolean");
  t.author_verified = verified.get<bool>();
  if (t.follower_retweeter_count > t.retweeter_count)
    throw Error("invariant violated: follower_retweeter_count (" +
                std::to_string(t.follower_retweeter_count) + ") > retweeter_count (" +
                std::to_string(t.retweeter_count) + ")");
  return t;
}

ordered_json parse_json_line(std::string_view line) {
  try {
    return ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Tweet parse_tweet(std::string_view line, const std::set<std::string>& languages) {
  return tweet_from_json(parse_json_line(line), languages);
}

LoadResult read_tweets(std::istream& in, const std::set<std::string>& languages) {
  LoadResult result;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      auto j = parse_json_line(line);
      if (j.is_object()) {
        auto rt = j.find("retweet_of_id");
        if (rt != j.end() && rt->is_string() && j.value("text", std::string{}).empty()) {
          ++result.retweets_collapsed;
          continue;
        }
      }
      Tweet t = tweet_from_json(j, languages);
      if (!seen.insert(t.id).second) {
        result.diagnostics.push_back({lineno, "duplicate tweet id '" + t.id + "' ignored"});
        continue;
      }
      result.tweets.push_back(std::move(t));
    } catch (const Error& e) {
      result.diagnostics.push_back({lineno, e.what()});
    }
  }
  return result;
}

FileTweetSource::FileTweetSource(std::filesystem::path path, std::set<std::string> languages)
    : path_(std::move(path)), languages_(std::move(languages)) {}

LoadResult FileTweetSource::load() const {
  std::ifstream in(path_);
  if (!in) throw Error("cannot open tweet source '" + path_.string() + "'");
  return read_tweets(in, languages_);
}

std::string FileTweetSource::describe() const { return "file:" + path_.string(); }

LoadResult load_tweets(const TweetSource& source) { return source.load(); }

std::vector<Tweet> filter_by_shares(const std::vector<Tweet>& tweets,
                                    std::uint64_t min_exclusive) {
  std::vector<Tweet> out;
  for (const auto& t : tweets)
    if (t.share_count > min_exclusive) out.push_back(t);
  return out;
}

std::vector<DailyBatch> partition_daily(const std::vector<Tweet>& tweets, TzOffset tz) {
  std::map<std::pair<std::chrono::sys_days, std::string>, std::vector<Tweet>> groups;
  for (const auto& t : tweets)
    groups[{std::chrono::sys_days{local_date(t.created_at, tz)}, t.lang}].push_back(t);
  std::vector<DailyBatch> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups)
    out.push_back(DailyBatch{Date{key.first}, key.second, std::move(members)});
  return out;
}

}  // namespace debunk
