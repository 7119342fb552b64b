#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "debunk/timeutil.hpp"

namespace debunk {

struct Tweet {
  std::string id;
  std::string lang;
  std::string text;
  Timestamp created_at{};
  std::uint64_t share_count = 0;
  std::uint64_t like_count = 0;
  std::vector<std::string> urls;
  std::optional<std::string> reply_to_id;
  std::optional<std::string> quote_of_id;
  std::uint64_t retweeter_count = 0;
  std::uint64_t follower_retweeter_count = 0;
  bool author_verified = false;

  friend bool operator==(const Tweet&, const Tweet&) = default;
};

struct DailyBatch {
  Date date;
  std::string lang;
  std::vector<Tweet> tweets;
};

const std::set<std::string>& default_languages();

// One line of the record format. Keys are the Tweet field names in declaration
// order; absent optional ids serialize as null.
std::string serialize_tweet(const Tweet& t);

// Parses and validates one record. Throws Error on malformed JSON, missing or
// mistyped fields, or violated invariants. An empty language set accepts any
// language code.
Tweet parse_tweet(std::string_view line, const std::set<std::string>& languages);

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct LoadResult {
  std::vector<Tweet> tweets;
  std::vector<Diagnostic> diagnostics;
  std::size_t retweets_collapsed = 0;
};

// Reads line-delimited records. Bad records become diagnostics and loading
// continues. Pure retweets (a "retweet_of_id" key and empty text) are folded
// into their source tweet id and not returned; the source record carries the
// share count. Duplicate ids keep the first record.
LoadResult read_tweets(std::istream& in, const std::set<std::string>& languages);

class TweetSource {
 public:
  virtual ~TweetSource() = default;
  virtual LoadResult load() const = 0;
  virtual std::string describe() const = 0;
};

class FileTweetSource : public TweetSource {
 public:
  explicit FileTweetSource(std::filesystem::path path,
                           std::set<std::string> languages = default_languages());

  // Throws Error when the file cannot be opened.
  LoadResult load() const override;
  std::string describe() const override;

 private:
  std::filesystem::path path_;
  std::set<std::string> languages_;
};

LoadResult load_tweets(const TweetSource& source);

// Keeps tweets with share_count > min_exclusive, in order.
std::vector<Tweet> filter_by_shares(const std::vector<Tweet>& tweets, std::uint64_t min_exclusive);

// Groups by (local calendar day, lang). Batches come out sorted by date then
// lang; tweets keep their input order inside a batch.
std::vector<DailyBatch> partition_daily(const std::vector<Tweet>& tweets, TzOffset tz);

}  // namespace debunk
