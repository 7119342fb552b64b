#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "debunk/archive.hpp"

struct sqlite3;

namespace debunk {

class StorageError : public Error {
 public:
  using Error::Error;
};

// Embedded on-disk archive: crawled tweets, archived days, votes.
//
// A day is replaced in one transaction, so readers observe either the old or
// the new cluster list. Votes live in their own table keyed by cluster id and
// survive re-archiving. All access goes through one connection behind a mutex.
class ArchiveStore {
 public:
  // ":memory:" opens a private in-memory database.
  explicit ArchiveStore(const std::filesystem::path& db_path);
  ~ArchiveStore();
  ArchiveStore(const ArchiveStore&) = delete;
  ArchiveStore& operator=(const ArchiveStore&) = delete;

  // Inserts or replaces by tweet id. Returns the number written.
  std::size_t put_tweets(const std::vector<Tweet>& tweets);
  // Tweets of `lang` with from <= created_at < to, ordered by id.
  std::vector<Tweet> tweets_between(Timestamp from, Timestamp to, const std::string& lang) const;
  std::size_t tweet_count() const;

  // Atomically replaces every cluster stored for (date, lang). Each payload
  // must carry that date and lang and positions must be unique.
  void replace_day(Date date, const std::string& lang, const std::vector<StoredCluster>& clusters);

  // Clusters for (date, lang) in position order, at most `limit` when given.
  std::vector<StoredCluster> read_day(Date date, const std::string& lang,
                                      std::optional<std::size_t> limit = std::nullopt) const;
  // Raw stored payloads, position order.
  std::vector<std::string> read_day_payloads(Date date, const std::string& lang) const;

  std::optional<StoredCluster> find_cluster(const std::string& cluster_id) const;

  // Days with stored clusters for `lang` in [from, to], ascending.
  std::vector<Date> days(Date from, Date to, const std::string& lang) const;

  // Upserts by (cluster_id, voter_id). Throws NotFound for unknown clusters.
  Tally record_vote(const Vote& vote);
  Tally tally(const std::string& cluster_id) const;

 private:
  sqlite3* db_ = nullptr;
  mutable std::mutex mu_;
};

}  // namespace debunk
