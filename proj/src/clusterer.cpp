#include "debunk/clusterer.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "debunk/union_find.hpp"
#include "debunk/url.hpp"
#include "debunk/wmd.hpp"

namespace debunk {

const char* to_string(LinkReason r) {
  switch (r) {
    case LinkReason::Url:
      return "url";
    case LinkReason::Reply:
      return "reply";
    case LinkReason::Wmd:
      return "wmd";
  }
  return "url";
}

LinkReason link_reason_from_string(const std::string& s) {
  if (s == "url") return LinkReason::Url;
  if (s == "reply") return LinkReason::Reply;
  if (s == "wmd") return LinkReason::Wmd;
  throw Error("unknown link reason '" + s + "'");
}

namespace {

struct Edge {
  std::size_t i, j;
  LinkReason reason;
  std::optional<double> distance;
};

// Links every member of each key group to the group's first member.
void key_edges(const std::vector<std::vector<std::string>>& keys, LinkReason reason,
               std::vector<Edge>& edges) {
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (const auto& k : keys[i]) {
      auto [it, inserted] = first.emplace(k, i);
      if (!inserted && it->second != i) edges.push_back({it->second, i, reason, std::nullopt});
    }
}

}  // namespace

std::vector<EventCluster> group_tweets(const DailyBatch& batch,
                                       const std::map<std::string, EventPhrase>& phrases,
                                       const EmbeddingTable& table,
                                       const GroupingOptions& options, GroupingStats* stats) {
  if (!(options.tau > 0)) throw Error("tau must be positive");
  GroupingStats local;
  GroupingStats& st = stats ? *stats : local;
  st = GroupingStats{};

  std::vector<const Tweet*> tweets;
  for (const auto& t : batch.tweets) tweets.push_back(&t);
  std::sort(tweets.begin(), tweets.end(),
            [](const Tweet* a, const Tweet* b) { return a->id < b->id; });
  const std::size_t n = tweets.size();

  std::vector<Edge> edges;
  {
    std::vector<std::vector<std::string>> url_keys(n), reply_keys(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& u : tweets[i]->urls) url_keys[i].push_back(normalize_url(u));
      if (tweets[i]->reply_to_id) reply_keys[i].push_back(*tweets[i]->reply_to_id);
      if (tweets[i]->quote_of_id) reply_keys[i].push_back(*tweets[i]->quote_of_id);
    }
    key_edges(url_keys, LinkReason::Url, edges);
    key_edges(reply_keys, LinkReason::Reply, edges);
  }

  // Phrase side: nBOWs for every tweet whose phrase has in-vocabulary words.
  std::vector<std::size_t> with_bow;
  std::vector<NBow> bows;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = phrases.find(tweets[i]->id);
    if (it == phrases.end()) continue;
    try {
      bows.push_back(nbow(it->second.words, table, &st.oov_tokens));
      with_bow.push_back(i);
    } catch (const EmptyDistribution&) {
      ++st.unlinkable_phrases;
    }
  }
  const std::size_t k = with_bow.size();
  st.phrase_pairs = k < 2 ? 0 : k * (k - 1) / 2;
  if (options.max_pairs && st.phrase_pairs > *options.max_pairs)
    throw Error("batch has " + std::to_string(st.phrase_pairs) +
                " phrase pairs, above the configured cap of " + std::to_string(*options.max_pairs));

  // Pairs already joined by URL or reply links cannot change the partition.
  UnionFind uf(n);
  std::vector<Edge> applied;
  for (const auto& e : edges)
    if (uf.unite(e.i, e.j)) applied.push_back(e);
  std::vector<std::size_t> component(n);
  for (std::size_t i = 0; i < n; ++i) component[i] = uf.find(i);

  struct Partial {
    std::vector<Edge> edges;
    std::size_t prefiltered = 0, solves = 0;
  };
  auto work = [&](std::size_t first_row, std::size_t stride, Partial& out) {
    for (std::size_t a = first_row; a < k; a += stride)
      for (std::size_t b = a + 1; b < k; ++b) {
        if (component[with_bow[a]] == component[with_bow[b]]) continue;
        if (options.centroid_prefilter && wcd_lower_bound(bows[a], bows[b], table) >= options.tau) {
          ++out.prefiltered;
          continue;
        }
        ++out.solves;
        double d = wmd(bows[a], bows[b], table);
        if (d < options.tau) out.edges.push_back({with_bow[a], with_bow[b], LinkReason::Wmd, d});
      }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(k)));
  std::vector<Partial> partials(threads);
  if (threads == 1) {
    work(0, 1, partials[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work, t, threads, std::ref(partials[t]));
    for (auto& th : pool) th.join();
  }
  std::vector<Edge> wmd_edges;
  for (auto& p : partials) {
    st.prefiltered += p.prefiltered;
    st.wmd_solves += p.solves;
    wmd_edges.insert(wmd_edges.end(), p.edges.begin(), p.edges.end());
  }
  std::sort(wmd_edges.begin(), wmd_edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
  for (const auto& e : wmd_edges)
    if (uf.unite(e.i, e.j)) applied.push_back(e);

  // Components in order of their smallest member; ids are sorted so the
  // smallest index is the smallest id.
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<EventCluster> clusters;
  for (std::size_t i = 0; i < n; ++i) {
    auto root = uf.find(i);
    auto [it, inserted] = slot.emplace(root, clusters.size());
    if (inserted) {
      clusters.emplace_back();
      clusters.back().cluster_id = tweets[i]->id;
    }
    auto& c = clusters[it->second];
    c.tweet_ids.push_back(tweets[i]->id);
    if (auto p = phrases.find(tweets[i]->id); p != phrases.end()) c.phrases.emplace(p->first, p->second);
  }
  for (const auto& e : applied) {
    auto& c = clusters[slot.at(uf.find(e.i))];
    c.link_evidence.push_back({tweets[e.i]->id, tweets[e.j]->id, e.reason, e.distance});
  }
  return clusters;
}

}  // namespace debunk
