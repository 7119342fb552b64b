#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "debunk/corpus.hpp"
#include "debunk/embedding.hpp"
#include "debunk/extractor.hpp"

namespace debunk {

enum class LinkReason { Url, Reply, Wmd };

const char* to_string(LinkReason r);
LinkReason link_reason_from_string(const std::string& s);

struct LinkEvidence {
  std::string a;
  std::string b;
  LinkReason reason = LinkReason::Url;
  std::optional<double> distance;  // set for Wmd links

  friend bool operator==(const LinkEvidence&, const LinkEvidence&) = default;
};

struct EventCluster {
  std::string cluster_id;              // smallest member id
  std::vector<std::string> tweet_ids;  // sorted
  std::map<std::string, EventPhrase> phrases;
  // Only the links that joined two previously separate groups, in the order
  // they were applied: URL links, then reply/quote links, then phrase links.
  std::vector<LinkEvidence> link_evidence;

  friend bool operator==(const EventCluster&, const EventCluster&) = default;
};

struct GroupingOptions {
  double tau = 0.25;
  // Skip the exact solve when the centroid bound already reaches tau.
  bool centroid_prefilter = true;
  // Fail instead of comparing more than this many phrase pairs.
  std::optional<std::size_t> max_pairs;
  unsigned threads = 1;
};

struct GroupingStats {
  std::size_t phrase_pairs = 0;
  std::size_t prefiltered = 0;
  std::size_t wmd_solves = 0;
  std::size_t unlinkable_phrases = 0;  // every token out of vocabulary
  std::size_t oov_tokens = 0;
};

// Union-find closure of: shared normalized URL; shared reply or quote target;
// phrase WMD strictly below tau. Clusters come out sorted by cluster_id.
std::vector<EventCluster> group_tweets(const DailyBatch& batch,
                                       const std::map<std::string, EventPhrase>& phrases,
                                       const EmbeddingTable& table,
                                       const GroupingOptions& options = {},
                                       GroupingStats* stats = nullptr);

}  // namespace debunk
