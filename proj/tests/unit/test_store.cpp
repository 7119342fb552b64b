#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "debunk/error.hpp"
#include "debunk/json_codec.hpp"
#include "debunk/service.hpp"
#include "debunk/store.hpp"

using namespace debunk;

namespace {

Date day(const char* s) { return parse_date(s); }

StoredCluster stored(const std::string& date, const std::string& lang, const std::string& id, int position,
                     std::size_t members = 1) {
  StoredCluster s;
  s.date = day(date.c_str());
  s.lang = lang;
  for (std::size_t k = 0; k < members; ++k) {
    Tweet t;
    t.id = id + (k ? "_" + std::to_string(k) : "");
    t.lang = lang;
    t.text = "tweet " + t.id + " is fake";
    t.created_at = parse_rfc3339(date + "T10:00:00Z");
    t.share_count = 10 + k;
    t.urls = {"https://example.com/" + id};
    s.members.push_back(t);
    s.ranked.cluster.tweet_ids.push_back(t.id);
  }
  s.ranked.cluster.cluster_id = id;
  EventPhrase p;
  p.tweet_id = id;
  p.text = "phrase " + id;
  p.words = {"phrase", id};
  p.token_indices = {{0, 1}, {0, 2}};
  s.ranked.cluster.phrases[id] = p;
  if (members > 1) s.ranked.cluster.link_evidence.push_back({id, id + "_1", LinkReason::Wmd, 0.125});
  s.ranked.representative_tweet_id = id;
  s.ranked.position = position;
  s.ranked.representative_ranks = FeatureRanks{id, 1, 2, 3, 2.0};
  return s;
}

class TempDb : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() /
            ("debunk_store_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".sqlite");
    std::filesystem::remove(path_);
  }
  void TearDown() override {
    for (auto suffix : {"", "-wal", "-shm"}) std::filesystem::remove(path_.string() + suffix);
  }
  std::filesystem::path path_;
};

}  // namespace

TEST(Codec, StoredClusterRoundTrip) {
  auto s = stored("2019-12-07", "en", "c1", 1, 3);
  auto j = json::to_json(s);
  auto back = json::stored_from_json(j);
  EXPECT_EQ(json::to_json(back).dump(), j.dump());
  EXPECT_EQ(back.ranked, s.ranked);
  EXPECT_EQ(back.members, s.members);
}

TEST_F(TempDb, TweetsPersistAndQueryByWindow) {
  ArchiveStore store(path_);
  std::vector<Tweet> ts;
  for (int i = 0; i < 3; ++i) {
    Tweet t;
    t.id = std::to_string(i);
    t.lang = i == 2 ? "ja" : "en";
    t.created_at = parse_rfc3339("2019-12-07T0" + std::to_string(i) + ":00:00Z");
    ts.push_back(t);
  }
  EXPECT_EQ(store.put_tweets(ts), 3u);
  EXPECT_EQ(store.put_tweets(ts), 3u);
  EXPECT_EQ(store.tweet_count(), 3u);
  auto got = store.tweets_between(parse_rfc3339("2019-12-07T00:00:00Z"), parse_rfc3339("2019-12-07T01:00:00Z"), "en");
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0], ts[0]);
}

TEST_F(TempDb, DayRoundTripIsByteStable) {
  std::vector<std::string> payloads;
  {
    ArchiveStore store(path_);
    store.replace_day(day("2019-12-07"), "en", {stored("2019-12-07", "en", "a", 1, 2), stored("2019-12-07", "en", "b", 2)});
    payloads = store.read_day_payloads(day("2019-12-07"), "en");
    auto back = store.read_day(day("2019-12-07"), "en");
    store.replace_day(day("2019-12-07"), "en", back);
    EXPECT_EQ(store.read_day_payloads(day("2019-12-07"), "en"), payloads);
  }
  ArchiveStore reopened(path_);
  EXPECT_EQ(reopened.read_day_payloads(day("2019-12-07"), "en"), payloads);
  EXPECT_EQ(reopened.read_day(day("2019-12-07"), "en", 1).size(), 1u);
  EXPECT_TRUE(reopened.read_day(day("2019-12-08"), "en").empty());
  EXPECT_TRUE(reopened.read_day(day("2019-12-07"), "ja").empty());
  EXPECT_EQ(reopened.days(day("2019-12-01"), day("2019-12-31"), "en").size(), 1u);
  ASSERT_TRUE(reopened.find_cluster("b"));
  EXPECT_EQ(reopened.find_cluster("b")->ranked.position, 2);
  EXPECT_FALSE(reopened.find_cluster("zz"));
}

TEST_F(TempDb, ReplaceDayValidatesAndRollsBack) {
  ArchiveStore store(path_);
  store.replace_day(day("2019-12-07"), "en", {stored("2019-12-07", "en", "a", 1)});
  EXPECT_THROW(store.replace_day(day("2019-12-07"), "en", {stored("2019-12-07", "en", "x", 1), stored("2019-12-07", "en", "y", 1)}),
               Error);
  EXPECT_THROW(store.replace_day(day("2019-12-07"), "en", {stored("2019-12-08", "en", "x", 1)}), Error);
  EXPECT_THROW(store.replace_day(day("2019-12-07"), "en", {stored("2019-12-07", "ja", "x", 1)}), Error);
  auto still = store.read_day(day("2019-12-07"), "en");
  ASSERT_EQ(still.size(), 1u);
  EXPECT_EQ(still[0].ranked.cluster.cluster_id, "a");
}

TEST_F(TempDb, VotesOverwriteAndSurviveReArchiving) {
  ArchiveStore store(path_);
  ArchiveService svc(store);
  svc.persist_batch(day("2019-12-07"), "en", {stored("2019-12-07", "en", "a", 1), stored("2019-12-07", "en", "b", 2)});
  Vote v{"a", "alice", Verdict::Fake, parse_rfc3339("2019-12-07T12:00:00Z")};
  EXPECT_EQ(svc.record_vote(v), (Tally{1, 0}));
  v.verdict = Verdict::NotFake;
  EXPECT_EQ(svc.record_vote(v), (Tally{0, 1}));
  v.voter_id = "bob";
  v.verdict = Verdict::Fake;
  svc.record_vote(v);
  v.voter_id = "carol";
  EXPECT_EQ(svc.record_vote(v), (Tally{2, 1}));
  EXPECT_THROW(svc.record_vote(Vote{"nope", "alice", Verdict::Fake, {}}), NotFound);

  svc.persist_batch(day("2019-12-07"), "en", {stored("2019-12-07", "en", "b", 7), stored("2019-12-07", "en", "a", 9)});
  auto top = svc.get_top_clusters(day("2019-12-07"), "en");
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].stored.ranked.cluster.cluster_id, "b");
  EXPECT_EQ(top[0].stored.ranked.position, 1);
  EXPECT_EQ(top[1].stored.ranked.position, 2);
  EXPECT_EQ(top[1].tally, (Tally{2, 1}));
  EXPECT_THROW(svc.get_top_clusters(day("2019-12-07"), "en", 0), Error);
  EXPECT_EQ(svc.get_top_clusters(day("2019-12-07"), "en", 1).size(), 1u);
}

TEST_F(TempDb, LabelsAndExport) {
  ArchiveStore store(path_);
  ArchiveService svc(store);
  svc.persist_batch(day("2019-12-07"), "en", {stored("2019-12-07", "en", "a", 1), stored("2019-12-07", "en", "b", 2),
                                             stored("2019-12-07", "en", "c", 3)});
  svc.persist_batch(day("2019-12-09"), "en", {stored("2019-12-09", "en", "d", 1)});
  for (int i = 0; i < 6; ++i) svc.record_vote({"a", "v" + std::to_string(i), Verdict::Fake, {}});
  svc.record_vote({"a", "w", Verdict::NotFake, {}});
  std::ostringstream first, second, empty;
  EXPECT_EQ(svc.export_dataset(day("2019-12-07"), day("2019-12-09"), "en", first), 4u);
  svc.export_dataset(day("2019-12-07"), day("2019-12-09"), "en", second);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(svc.export_dataset(day("2019-12-10"), day("2019-12-20"), "en", empty), 0u);
  EXPECT_EQ(empty.str(), "");
  std::istringstream lines(first.str());
  std::string line;
  std::vector<json::Json> recs;
  while (std::getline(lines, line)) recs.push_back(json::Json::parse(line));
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0]["cluster_id"], "a");
  EXPECT_EQ(recs[0]["label"], "fake");
  EXPECT_EQ(recs[1]["label"], "unverified");
  EXPECT_EQ(recs[3]["date"], "2019-12-09");
  EXPECT_EQ(recs[0]["headline"], "phrase a");
  EXPECT_EQ(recs[0]["recrawl_queries"][0], "url:https://example.com/a");
  EXPECT_EQ(recs[0]["vote_tally"]["fake"], 6);
}

TEST_F(TempDb, ReadersNeverSeeAHalfWrittenDay) {
  ArchiveStore store(path_);
  auto version = [](int v) {
    std::vector<StoredCluster> day_v;
    for (int k = 0; k < 20; ++k) day_v.push_back(stored("2019-12-07", "en", "v" + std::to_string(v) + "_" + std::to_string(k), k + 1));
    return day_v;
  };
  store.replace_day(day("2019-12-07"), "en", version(0));
  std::atomic<bool> done{false};
  std::atomic<int> bad{0}, reads{0};
  std::vector<std::thread> readers;
  for (int r = 0; r < 3; ++r)
    readers.emplace_back([&] {
      while (!done) {
        auto d = store.read_day(day("2019-12-07"), "en");
        std::set<std::string> versions;
        for (const auto& c : d) versions.insert(c.ranked.cluster.cluster_id.substr(0, c.ranked.cluster.cluster_id.find('_')));
        if (d.size() != 20 || versions.size() != 1) ++bad;
        ++reads;
      }
    });
  for (int v = 1; v <= 30; ++v) store.replace_day(day("2019-12-07"), "en", version(v));
  while (reads < 30) std::this_thread::yield();
  done = true;
  for (auto& t : readers) t.join();
  EXPECT_EQ(bad, 0);
}

TEST(Store, StorageErrors) {
  auto file = std::filesystem::temp_directory_path() / "debunk-store-not-a-dir";
  std::ofstream(file) << "x";
  EXPECT_THROW(ArchiveStore(file / "x.sqlite"), StorageError);
  std::filesystem::remove(file);
  ArchiveStore mem(":memory:");
  EXPECT_EQ(mem.tweet_count(), 0u);
}
