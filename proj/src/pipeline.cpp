#include "debunk/pipeline.hpp"

#include <algorithm>

namespace debunk {

std::pair<Timestamp, Timestamp> day_bounds(Date date, TzOffset tz) {
  Timestamp start = std::chrono::sys_days{date} - tz.offset;
  return {start, start + std::chrono::days{1}};
}

ArchiveResult archive_batch(const DailyBatch& batch,
                            const std::map<std::string, DependencyDocument>& parses,
                            const PatternSet& patterns, const LanguageProfile& profile,
                            const EmbeddingTable& table, const PipelineSettings& settings) {
  ArchiveResult result;
  auto& st = result.stats;
  st.input_tweets = batch.tweets.size();

  DailyBatch kept{batch.date, batch.lang, filter_by_shares(batch.tweets, settings.min_shares_exclusive)};
  st.after_share_filter = kept.tweets.size();

  DailyBatch debunking{batch.date, batch.lang, {}};
  for (const auto& t : kept.tweets) {
    auto spans = patterns.match(batch.lang, t.text);
    if (spans.empty()) continue;
    debunking.tweets.push_back(t);
    ++st.matched;
    auto doc = parses.find(t.id);
    if (doc == parses.end()) {
      st.diagnostics.push_back("tweet " + t.id + ": no dependency parse");
      continue;
    }
    ++st.parsed;
    if (auto phrase = extract_from_matches(doc->second, spans, profile))
      result.phrases.emplace(t.id, std::move(*phrase));
  }
  st.phrases = result.phrases.size();

  auto clusters = group_tweets(debunking, result.phrases, table, settings.grouping, &st.grouping);
  std::map<std::string, Tweet> by_id;
  for (const auto& t : debunking.tweets) by_id.emplace(t.id, t);
  auto ranked = rank_clusters(clusters, by_id);
  st.clusters = ranked.size();

  for (auto& r : ranked) {
    StoredCluster s;
    s.date = batch.date;
    s.lang = batch.lang;
    for (const auto& id : r.cluster.tweet_ids) s.members.push_back(by_id.at(id));
    s.ranked = std::move(r);
    result.clusters.push_back(std::move(s));
  }
  return result;
}

}  // namespace debunk
