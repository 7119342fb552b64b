#include <gtest/gtest.h>

#include <random>

#include "debunk/error.hpp"
#include "debunk/clusterer.hpp"
#include "debunk/wmd.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace debunk;
using fixtures::oracle_partition;
using fixtures::synthetic;

namespace {

Tweet tw(std::string id) {
  Tweet t;
  t.id = std::move(id);
  t.lang = "en";
  t.text = "x";
  return t;
}

EventPhrase phrase(const std::string& id, std::vector<std::string> words) {
  EventPhrase p;
  p.tweet_id = id;
  p.words = words;
  for (const auto& w : words) p.text += (p.text.empty() ? "" : " ") + w;
  return p;
}

std::vector<std::vector<std::string>> partition(const std::vector<EventCluster>& cs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cs) out.push_back(c.tweet_ids);
  return out;
}

bool refines(const std::vector<EventCluster>& fine, const std::vector<EventCluster>& coarse) {
  std::map<std::string, std::string> owner;
  for (const auto& c : coarse)
    for (const auto& id : c.tweet_ids) owner[id] = c.cluster_id;
  for (const auto& c : fine)
    for (const auto& id : c.tweet_ids)
      if (owner[id] != owner[c.tweet_ids.front()]) return false;
  return true;
}

}  // namespace

TEST(Clusterer, SharedUrlLinks) {
  DailyBatch b;
  b.tweets = {tw("2"), tw("1")};
  b.tweets[0].urls = {"https://example.com/a?utm_source=x"};
  b.tweets[1].urls = {"HTTPS://EXAMPLE.COM/a"};
  auto cs = group_tweets(b, {}, EmbeddingTable(1));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].cluster_id, "1");
  EXPECT_EQ(cs[0].tweet_ids, (std::vector<std::string>{"1", "2"}));
  ASSERT_EQ(cs[0].link_evidence.size(), 1u);
  EXPECT_EQ(cs[0].link_evidence[0].reason, LinkReason::Url);
  EXPECT_FALSE(cs[0].link_evidence[0].distance);
}

TEST(Clusterer, LoneTweetIsSingleton) {
  DailyBatch b;
  b.tweets = {tw("a")};
  auto cs = group_tweets(b, {}, EmbeddingTable(1));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].tweet_ids, std::vector<std::string>{"a"});
  EXPECT_TRUE(cs[0].link_evidence.empty());
  DailyBatch empty;
  EXPECT_TRUE(group_tweets(empty, {}, EmbeddingTable(1)).empty());
}

TEST(Clusterer, TransitiveUrlThenPhrase) {
  EmbeddingTable t(1);
  t.add("moon", {0.0});
  t.add("lunar", {0.2});
  t.add("shark", {5.0});
  DailyBatch b;
  b.tweets = {tw("A"), tw("B"), tw("C")};
  b.tweets[0].urls = {"https://u.example/x"};
  b.tweets[1].urls = {"https://u.example/x"};
  std::map<std::string, EventPhrase> ph{{"A", phrase("A", {"shark"})},
                                        {"B", phrase("B", {"moon"})},
                                        {"C", phrase("C", {"lunar"})}};
  auto cs = group_tweets(b, ph, t);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].tweet_ids, (std::vector<std::string>{"A", "B", "C"}));
  ASSERT_EQ(cs[0].link_evidence.size(), 2u);
  EXPECT_EQ(cs[0].link_evidence[1].reason, LinkReason::Wmd);
  EXPECT_NEAR(*cs[0].link_evidence[1].distance, 0.2, 1e-12);
  EXPECT_EQ(cs[0].phrases.size(), 3u);
}

TEST(Clusterer, ReplyAndQuoteShareTargets) {
  DailyBatch b;
  b.tweets = {tw("1"), tw("2"), tw("3"), tw("target")};
  b.tweets[0].reply_to_id = "target";
  b.tweets[1].quote_of_id = "target";
  auto cs = group_tweets(b, {}, EmbeddingTable(1));
  EXPECT_EQ(partition(cs), (std::vector<std::vector<std::string>>{{"1", "2"}, {"3"}, {"target"}}));
  EXPECT_EQ(cs[0].link_evidence[0].reason, LinkReason::Reply);
}

TEST(Clusterer, StrictThresholdAndOovPhrases) {
  EmbeddingTable t(1);
  t.add("a", {0.0});
  t.add("b", {0.25});
  DailyBatch bt;
  bt.tweets = {tw("1"), tw("2"), tw("3")};
  std::map<std::string, EventPhrase> ph{{"1", phrase("1", {"a"})}, {"2", phrase("2", {"b"})}, {"3", phrase("3", {"zz"})}};
  GroupingStats st;
  EXPECT_EQ(group_tweets(bt, ph, t, {}, &st).size(), 3u);
  EXPECT_EQ(st.unlinkable_phrases, 1u);
  EXPECT_EQ(st.oov_tokens, 1u);
  GroupingOptions wide;
  wide.tau = 0.2500001;
  EXPECT_EQ(group_tweets(bt, ph, t, wide).size(), 2u);
  GroupingOptions bad;
  bad.tau = 0;
  EXPECT_THROW(group_tweets(bt, ph, t, bad), Error);
}

TEST(Clusterer, PairCapFailsLoudly) {
  EmbeddingTable t(1);
  t.add("a", {0.0});
  DailyBatch b;
  std::map<std::string, EventPhrase> ph;
  for (int i = 0; i < 5; ++i) {
    b.tweets.push_back(tw(std::to_string(i)));
    ph.emplace(std::to_string(i), phrase(std::to_string(i), {"a"}));
  }
  GroupingOptions o;
  o.max_pairs = 9;
  EXPECT_THROW(group_tweets(b, ph, t, o), Error);
  o.max_pairs = 10;
  EXPECT_EQ(group_tweets(b, ph, t, o).size(), 1u);
}

TEST(ClustererProperty, MatchesRelationGraphComponents) {
  std::mt19937_64 rng(17);
  int batches = 0;
  while (batches < 200) {
    auto s = synthetic(rng, 1 + rng() % 200);
    bool tie = false;
    auto want = oracle_partition(s, 0.25, &tie);
    if (tie) continue;
    ++batches;
    auto got = group_tweets(s.batch, s.phrases, s.table);
    auto parts = partition(got);
    std::sort(parts.begin(), parts.end());
    ASSERT_EQ(parts, want);
    for (const auto& c : got) {
      EXPECT_EQ(c.cluster_id, c.tweet_ids.front());
      for (const auto& e : c.link_evidence)
        if (e.reason == LinkReason::Wmd) EXPECT_LT(*e.distance, 0.25);
      EXPECT_EQ(c.link_evidence.size(), c.tweet_ids.size() - 1);
    }
    for (std::size_t k = 1; k < got.size(); ++k) EXPECT_LT(got[k - 1].cluster_id, got[k].cluster_id);
  }
}

TEST(ClustererProperty, ShuffleThreadsAndPrefilterDoNotMatter) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 50; ++round) {
    auto s = synthetic(rng, 1 + rng() % 200);
    auto base = group_tweets(s.batch, s.phrases, s.table);
    auto shuffled = s.batch;
    std::shuffle(shuffled.tweets.begin(), shuffled.tweets.end(), rng);
    EXPECT_EQ(group_tweets(shuffled, s.phrases, s.table), base);
    GroupingOptions o;
    o.threads = 4;
    o.centroid_prefilter = false;
    EXPECT_EQ(group_tweets(s.batch, s.phrases, s.table, o), base);
  }
}

TEST(ClustererProperty, LowerTauOnlySplits) {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 50; ++round) {
    auto s = synthetic(rng, 1 + rng() % 200);
    std::vector<std::vector<EventCluster>> by_tau;
    for (double tau : {0.1, 0.25, 0.5}) {
      GroupingOptions o;
      o.tau = tau;
      by_tau.push_back(group_tweets(s.batch, s.phrases, s.table, o));
    }
    EXPECT_TRUE(refines(by_tau[0], by_tau[1]));
    EXPECT_TRUE(refines(by_tau[1], by_tau[2]));
    EXPECT_GE(by_tau[0].size(), by_tau[1].size());
    EXPECT_GE(by_tau[1].size(), by_tau[2].size());
  }
}
