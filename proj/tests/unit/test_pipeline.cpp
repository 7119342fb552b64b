#include <gtest/gtest.h>

#include "debunk/pipeline.hpp"
#include "fixtures.hpp"

using namespace debunk;

namespace {

Tweet tw(std::string id, std::string text, std::uint64_t shares, std::uint64_t likes) {
  Tweet t;
  t.id = std::move(id);
  t.lang = "en";
  t.text = std::move(text);
  t.share_count = shares;
  t.like_count = likes;
  return t;
}

DependencyDocument parse(const std::string& id, const std::string& text, const std::string& rows) {
  return parse_conllu(rows, id, text);
}

}  // namespace

TEST(Pipeline, DayBounds) {
  auto [a, b] = day_bounds(parse_date("2019-12-07"), {});
  EXPECT_EQ(format_rfc3339(a), "2019-12-07T00:00:00Z");
  EXPECT_EQ(format_rfc3339(b), "2019-12-08T00:00:00Z");
  auto [c, d] = day_bounds(parse_date("2019-12-07"), TzOffset::parse("+09:00"));
  EXPECT_EQ(format_rfc3339(c), "2019-12-06T15:00:00Z");
  EXPECT_EQ(format_rfc3339(d), "2019-12-07T15:00:00Z");
}

TEST(Pipeline, SmallBatch) {
  auto cfg = default_config();
  DailyBatch b{parse_date("2019-12-07"), "en", {}};
  b.tweets = {tw("1", "Moon base is fake!", 50, 500), tw("2", "Lunar base is fake!", 10, 20),
              tw("3", "Shark is fake!", 9, 3), tw("4", "Shark video is fake!", 2, 1000),
              tw("5", "Lovely day", 100, 100), tw("6", "This is fake!", 8, 8)};
  b.tweets[5].urls = {"https://x.example/shark"};
  b.tweets[2].urls = {"https://x.example/shark?utm_medium=social"};
  std::map<std::string, DependencyDocument> parses;
  parses.emplace("1", parse("1", b.tweets[0].text,
                            "1\tMoon\t_\t_\t_\t_\t2\tcompound\t_\t_\n2\tbase\t_\t_\t_\t_\t4\tnsubj\t_\t_\n"
                            "3\tis\t_\t_\t_\t_\t4\tcop\t_\t_\n4\tfake\t_\t_\t_\t_\t0\troot\t_\t_\n"
                            "5\t!\t_\t_\t_\t_\t4\tpunct\t_\t_\n"));
  parses.emplace("2", parse("2", b.tweets[1].text,
                            "1\tLunar\t_\t_\t_\t_\t2\tcompound\t_\t_\n2\tbase\t_\t_\t_\t_\t4\tnsubj\t_\t_\n"
                            "3\tis\t_\t_\t_\t_\t4\tcop\t_\t_\n4\tfake\t_\t_\t_\t_\t0\troot\t_\t_\n"
                            "5\t!\t_\t_\t_\t_\t4\tpunct\t_\t_\n"));
  EmbeddingTable table(1);
  table.add("moon", {0.0});
  table.add("lunar", {0.1});
  table.add("base", {0.0});
  table.add("shark", {9.0});

  auto r = archive_batch(b, parses, cfg.compile_patterns(), cfg.profile("en"), table, cfg.pipeline);
  EXPECT_EQ(r.stats.input_tweets, 6u);
  EXPECT_EQ(r.stats.after_share_filter, 5u);
  EXPECT_EQ(r.stats.matched, 4u);
  EXPECT_EQ(r.stats.parsed, 2u);
  EXPECT_EQ(r.stats.phrases, 2u);
  EXPECT_EQ(r.stats.diagnostics.size(), 2u);
  ASSERT_EQ(r.clusters.size(), 2u);
  EXPECT_EQ(r.clusters[0].ranked.cluster.tweet_ids, (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(r.clusters[0].ranked.representative_tweet_id, "1");
  EXPECT_EQ(r.clusters[0].headline(), "Moon base");
  EXPECT_EQ(r.clusters[1].ranked.cluster.tweet_ids, (std::vector<std::string>{"3", "6"}));
  EXPECT_EQ(r.clusters[1].ranked.position, 2);
  EXPECT_EQ(r.clusters[1].headline(), "");
  for (const auto& c : r.clusters) {
    EXPECT_EQ(c.members.size(), c.ranked.cluster.tweet_ids.size());
    EXPECT_EQ(c.date, b.date);
  }
}

TEST(Pipeline, EmptyAfterFilter) {
  auto cfg = default_config();
  DailyBatch b{parse_date("2019-12-07"), "en", {tw("1", "x is fake", 1, 1)}};
  auto r = archive_batch(b, {}, cfg.compile_patterns(), cfg.profile("en"), EmbeddingTable(1), cfg.pipeline);
  EXPECT_TRUE(r.clusters.empty());
  EXPECT_EQ(r.stats.after_share_filter, 0u);
}

TEST(Pipeline, SyntheticDayMatchesGenerator) {
  auto e = fixtures::load_end_to_end();
  EXPECT_EQ(e.tweets.size(), 500u);
  EXPECT_EQ(e.day.tweets.size(), e.expected.at("tweets_in_day").get<std::size_t>());
  auto r = fixtures::run_end_to_end(e, default_config());
  EXPECT_TRUE(r.stats.diagnostics.empty());
  EXPECT_EQ(r.clusters.size(), e.expected.at("cluster_count").get<std::size_t>());
  std::size_t clustered = 0;
  for (const auto& c : r.clusters) clustered += c.members.size();
  EXPECT_EQ(clustered, e.expected.at("clustered_tweets").get<std::size_t>());
  const auto& top = e.expected.at("top");
  ASSERT_GE(r.clusters.size(), top.size());
  for (std::size_t k = 0; k < top.size(); ++k) {
    const auto& got = r.clusters[k];
    EXPECT_EQ(got.ranked.cluster.cluster_id, top[k].at("cluster_id").get<std::string>());
    EXPECT_EQ(got.ranked.representative_tweet_id, top[k].at("representative_tweet_id").get<std::string>());
    EXPECT_EQ(got.ranked.cluster.tweet_ids, top[k].at("tweet_ids").get<std::vector<std::string>>());
    EXPECT_EQ(got.headline(), top[k].at("headline").get<std::string>());
    EXPECT_NEAR(got.ranked.representative_ranks.avg_rank, top[k].at("avg_rank").get<double>(), 1e-12);
  }
}
