#pragma once

#include <map>
#include <string>
#include <vector>

#include "debunk/clusterer.hpp"
#include "debunk/corpus.hpp"

namespace debunk {

struct FeatureRanks {
  std::string tweet_id;
  int like_rank = 1;
  int retweet_rank = 1;
  int public_rank = 1;
  double avg_rank = 1.0;

  int rank_sum() const { return like_rank + retweet_rank + public_rank; }
  friend bool operator==(const FeatureRanks&, const FeatureRanks&) = default;
};

struct RankedCluster {
  EventCluster cluster;
  std::string representative_tweet_id;
  int position = 1;
  FeatureRanks representative_ranks;

  friend bool operator==(const RankedCluster&, const RankedCluster&) = default;
};

// Share of retweeters who follow the author; 1.0 when nobody retweeted.
double public_score(const Tweet& t);

// Dense ranks: like_count and share_count descending, public score ascending.
// Sorted by average rank, ties by tweet id. Throws Error on empty input.
std::vector<FeatureRanks> rank_tweets(const std::vector<Tweet>& tweets);

// Ranks every clustered tweet together, picks each cluster's best-ranked
// member as representative and orders clusters by their representative.
// Throws NotFound when a member id has no tweet.
std::vector<RankedCluster> rank_clusters(const std::vector<EventCluster>& clusters,
                                         const std::map<std::string, Tweet>& tweets);

}  // namespace debunk
