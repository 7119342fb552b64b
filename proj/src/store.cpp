#include "debunk/store.hpp"

#include <sqlite3.h>

#include "debunk/json_codec.hpp"

namespace debunk {
namespace {

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK)
      throw StorageError(std::string("prepare failed: ") + sqlite3_errmsg(db));
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  Statement& bind(int i, const std::string& v) {
    check(sqlite3_bind_text(stmt_, i, v.data(), static_cast<int>(v.size()), SQLITE_TRANSIENT));
    return *this;
  }
  Statement& bind(int i, std::int64_t v) {
    check(sqlite3_bind_int64(stmt_, i, v));
    return *this;
  }

  // True while a row is available.
  bool step() {
    int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    throw StorageError(std::string("step failed: ") + sqlite3_errmsg(db_));
  }

  std::string text(int col) const {
    auto p = reinterpret_cast<const char*>(sqlite3_column_text(stmt_, col));
    return p ? std::string(p, static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col)))
             : std::string{};
  }
  std::int64_t integer(int col) const { return sqlite3_column_int64(stmt_, col); }

  void reset() {
    sqlite3_reset(stmt_);
    sqlite3_clear_bindings(stmt_);
  }

 private:
  void check(int rc) {
    if (rc != SQLITE_OK) throw StorageError(std::string("bind failed: ") + sqlite3_errmsg(db_));
  }
  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

void exec(sqlite3* db, const char* sql) {
  char* err = nullptr;
  if (sqlite3_exec(db, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw StorageError(msg);
  }
}

class Transaction {
 public:
  explicit Transaction(sqlite3* db) : db_(db) { exec(db_, "BEGIN IMMEDIATE"); }
  ~Transaction() {
    if (!done_) sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
  }
  void commit() {
    exec(db_, "COMMIT");
    done_ = true;
  }

 private:
  sqlite3* db_;
  bool done_ = false;
};

Tally tally_locked(sqlite3* db, const std::string& cluster_id) {
  Statement st(db, "SELECT verdict, COUNT(*) FROM votes WHERE cluster_id = ? GROUP BY verdict");
  st.bind(1, cluster_id);
  Tally t;
  while (st.step()) {
    auto n = static_cast<std::uint64_t>(st.integer(1));
    if (st.text(0) == "fake")
      t.fake = n;
    else
      t.not_fake = n;
  }
  return t;
}

}  // namespace

ArchiveStore::ArchiveStore(const std::filesystem::path& db_path) {
  if (db_path != ":memory:" && db_path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(db_path.parent_path(), ec);
    if (ec) throw StorageError("cannot create '" + db_path.parent_path().string() + "': " + ec.message());
  }
  if (sqlite3_open_v2(db_path.string().c_str(), &db_,
                      SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX,
                      nullptr) != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    throw StorageError("cannot open archive '" + db_path.string() + "': " + msg);
  }
  sqlite3_busy_timeout(db_, 5000);
  exec(db_, "PRAGMA journal_mode=WAL");
  exec(db_, "PRAGMA synchronous=NORMAL");
  exec(db_,
       "CREATE TABLE IF NOT EXISTS tweets ("
       "  id TEXT PRIMARY KEY, lang TEXT NOT NULL, created_at INTEGER NOT NULL,"
       "  record TEXT NOT NULL);"
       "CREATE INDEX IF NOT EXISTS tweets_by_time ON tweets(lang, created_at);"
       "CREATE TABLE IF NOT EXISTS clusters ("
       "  date TEXT NOT NULL, lang TEXT NOT NULL, position INTEGER NOT NULL,"
       "  cluster_id TEXT NOT NULL, payload TEXT NOT NULL,"
       "  PRIMARY KEY (date, lang, position));"
       "CREATE INDEX IF NOT EXISTS clusters_by_id ON clusters(cluster_id);"
       "CREATE TABLE IF NOT EXISTS votes ("
       "  cluster_id TEXT NOT NULL, voter_id TEXT NOT NULL, verdict TEXT NOT NULL,"
       "  cast_at TEXT NOT NULL, PRIMARY KEY (cluster_id, voter_id));");
}

ArchiveStore::~ArchiveStore() { sqlite3_close(db_); }

std::size_t ArchiveStore::put_tweets(const std::vector<Tweet>& tweets) {
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  Statement st(db_, "INSERT OR REPLACE INTO tweets (id, lang, created_at, record) VALUES (?, ?, ?, ?)");
  for (const auto& t : tweets) {
    st.bind(1, t.id).bind(2, t.lang);
    st.bind(3, static_cast<std::int64_t>(t.created_at.time_since_epoch().count()));
    st.bind(4, serialize_tweet(t));
    st.step();
    st.reset();
  }
  tx.commit();
  return tweets.size();
}

std::vector<Tweet> ArchiveStore::tweets_between(Timestamp from, Timestamp to,
                                                const std::string& lang) const {
  std::lock_guard lock(mu_);
  Statement st(db_,
               "SELECT record FROM tweets WHERE lang = ? AND created_at >= ? AND created_at < ?"
               " ORDER BY id");
  st.bind(1, lang)
      .bind(2, static_cast<std::int64_t>(from.time_since_epoch().count()))
      .bind(3, static_cast<std::int64_t>(to.time_since_epoch().count()));
  std::vector<Tweet> out;
  while (st.step()) out.push_back(parse_tweet(st.text(0), {}));
  return out;
}

std::size_t ArchiveStore::tweet_count() const {
  std::lock_guard lock(mu_);
  Statement st(db_, "SELECT COUNT(*) FROM tweets");
  st.step();
  return static_cast<std::size_t>(st.integer(0));
}

void ArchiveStore::replace_day(Date date, const std::string& lang,
                               const std::vector<StoredCluster>& clusters) {
  const std::string day = format_date(date);
  for (const auto& c : clusters)
    if (c.date != date || c.lang != lang)
      throw StorageError("cluster " + c.ranked.cluster.cluster_id + " does not belong to " + day +
                         "/" + lang);
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  {
    Statement del(db_, "DELETE FROM clusters WHERE date = ? AND lang = ?");
    del.bind(1, day).bind(2, lang);
    del.step();
  }
  for (const auto& c : clusters) {
    Statement ins(db_,
                  "INSERT INTO clusters (date, lang, position, cluster_id, payload)"
                  " VALUES (?, ?, ?, ?, ?)");
    ins.bind(1, day).bind(2, lang).bind(3, static_cast<std::int64_t>(c.ranked.position));
    ins.bind(4, c.ranked.cluster.cluster_id).bind(5, json::to_json(c).dump());
    ins.step();
  }
  tx.commit();
}

std::vector<std::string> ArchiveStore::read_day_payloads(Date date, const std::string& lang) const {
  std::lock_guard lock(mu_);
  Statement st(db_, "SELECT payload FROM clusters WHERE date = ? AND lang = ? ORDER BY position");
  st.bind(1, format_date(date)).bind(2, lang);
  std::vector<std::string> out;
  while (st.step()) out.push_back(st.text(0));
  return out;
}

std::vector<StoredCluster> ArchiveStore::read_day(Date date, const std::string& lang,
                                                  std::optional<std::size_t> limit) const {
  std::lock_guard lock(mu_);
  Statement st(db_,
               "SELECT payload FROM clusters WHERE date = ? AND lang = ? ORDER BY position LIMIT ?");
  st.bind(1, format_date(date)).bind(2, lang).bind(3, limit ? static_cast<std::int64_t>(*limit) : -1);
  std::vector<StoredCluster> out;
  while (st.step()) out.push_back(json::stored_from_json(json::Json::parse(st.text(0))));
  return out;
}

std::optional<StoredCluster> ArchiveStore::find_cluster(const std::string& cluster_id) const {
  std::lock_guard lock(mu_);
  Statement st(db_,
               "SELECT payload FROM clusters WHERE cluster_id = ? ORDER BY date DESC, lang LIMIT 1");
  st.bind(1, cluster_id);
  if (!st.step()) return std::nullopt;
  return json::stored_from_json(json::Json::parse(st.text(0)));
}

std::vector<Date> ArchiveStore::days(Date from, Date to, const std::string& lang) const {
  std::lock_guard lock(mu_);
  Statement st(db_,
               "SELECT DISTINCT date FROM clusters WHERE lang = ? AND date >= ? AND date <= ?"
               " ORDER BY date");
  st.bind(1, lang).bind(2, format_date(from)).bind(3, format_date(to));
  std::vector<Date> out;
  while (st.step()) out.push_back(parse_date(st.text(0)));
  return out;
}

Tally ArchiveStore::record_vote(const Vote& vote) {
  std::lock_guard lock(mu_);
  Transaction tx(db_);
  {
    Statement exists(db_, "SELECT 1 FROM clusters WHERE cluster_id = ? LIMIT 1");
    exists.bind(1, vote.cluster_id);
    if (!exists.step()) throw NotFound("unknown cluster '" + vote.cluster_id + "'");
  }
  {
    Statement up(db_,
                 "INSERT INTO votes (cluster_id, voter_id, verdict, cast_at) VALUES (?, ?, ?, ?)"
                 " ON CONFLICT(cluster_id, voter_id) DO UPDATE SET verdict = excluded.verdict,"
                 " cast_at = excluded.cast_at");
    up.bind(1, vote.cluster_id).bind(2, vote.voter_id).bind(3, std::string(to_string(vote.verdict)));
    up.bind(4, format_rfc3339(vote.cast_at));
    up.step();
  }
  Tally t = tally_locked(db_, vote.cluster_id);
  tx.commit();
  return t;
}

Tally ArchiveStore::tally(const std::string& cluster_id) const {
  std::lock_guard lock(mu_);
  return tally_locked(db_, cluster_id);
}

}  // namespace debunk
