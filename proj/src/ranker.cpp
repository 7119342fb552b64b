#include "debunk/ranker.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace debunk {
namespace {

template <typename T, typename Better>
std::vector<int> dense_ranks(const std::vector<T>& values, Better better) {
  std::vector<T> distinct(values);
  std::sort(distinct.begin(), distinct.end(), better);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (const auto& v : values) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), v, better);
    ranks.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  return ranks;
}

}  // namespace

double public_score(const Tweet& t) {
  if (t.retweeter_count == 0) return 1.0;
  return static_cast<double>(t.follower_retweeter_count) / static_cast<double>(t.retweeter_count);
}

std::vector<FeatureRanks> rank_tweets(const std::vector<Tweet>& tweets) {
  if (tweets.empty()) throw Error("cannot rank an empty list of tweets");
  std::vector<std::uint64_t> likes, shares;
  std::vector<double> publics;
  for (const auto& t : tweets) {
    likes.push_back(t.like_count);
    shares.push_back(t.share_count);
    publics.push_back(public_score(t));
  }
  auto like_r = dense_ranks(likes, std::greater<>{});
  auto share_r = dense_ranks(shares, std::greater<>{});
  auto public_r = dense_ranks(publics, std::less<>{});

  std::vector<FeatureRanks> out;
  out.reserve(tweets.size());
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    FeatureRanks r{tweets[i].id, like_r[i], share_r[i], public_r[i], 0.0};
    r.avg_rank = r.rank_sum() / 3.0;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const FeatureRanks& a, const FeatureRanks& b) {
    if (a.rank_sum() != b.rank_sum()) return a.rank_sum() < b.rank_sum();
    return a.tweet_id < b.tweet_id;
  });
  return out;
}

std::vector<RankedCluster> rank_clusters(const std::vector<EventCluster>& clusters,
                                         const std::map<std::string, Tweet>& tweets) {
  std::vector<Tweet> members;
  for (const auto& c : clusters)
    for (const auto& id : c.tweet_ids) {
      auto it = tweets.find(id);
      if (it == tweets.end()) throw NotFound("cluster member " + id + " has no tweet record");
      members.push_back(it->second);
    }
  if (members.empty()) return {};
  auto ranked = rank_tweets(members);
  std::unordered_map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < ranked.size(); ++i) order.emplace(ranked[i].tweet_id, i);

  std::vector<std::pair<std::size_t, const EventCluster*>> keyed;
  for (const auto& c : clusters) {
    if (c.tweet_ids.empty()) continue;
    std::size_t best = ranked.size();
    for (const auto& id : c.tweet_ids) best = std::min(best, order.at(id));
    keyed.emplace_back(best, &c);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RankedCluster> out;
  out.reserve(keyed.size());
  int position = 1;
  for (const auto& [best, c] : keyed)
    out.push_back(RankedCluster{*c, ranked[best].tweet_id, position++, ranked[best]});
  return out;
}

}  // namespace debunk
