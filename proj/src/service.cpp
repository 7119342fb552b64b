#include "debunk/service.hpp"

#include <ostream>

namespace debunk {

void ArchiveService::persist_batch(Date date, const std::string& lang,
                                   std::vector<StoredCluster> clusters) {
  int position = 1;
  for (auto& c : clusters) {
    c.date = date;
    c.lang = lang;
    c.ranked.position = position++;
  }
  store_.replace_day(date, lang, clusters);
}

ClusterView ArchiveService::view(StoredCluster stored) const {
  ClusterView v;
  v.tally = store_.tally(stored.ranked.cluster.cluster_id);
  v.label = derive_label(v.tally, policy_);
  v.stored = std::move(stored);
  return v;
}

std::vector<ClusterView> ArchiveService::get_top_clusters(Date date, const std::string& lang,
                                                          std::size_t limit) const {
  if (limit < 1) throw Error("limit must be at least 1");
  std::vector<ClusterView> out;
  for (auto& s : store_.read_day(date, lang, limit)) out.push_back(view(std::move(s)));
  return out;
}

std::optional<ClusterView> ArchiveService::get_cluster(const std::string& cluster_id) const {
  auto s = store_.find_cluster(cluster_id);
  if (!s) return std::nullopt;
  return view(std::move(*s));
}

Tally ArchiveService::record_vote(const Vote& vote) { return store_.record_vote(vote); }

std::size_t ArchiveService::export_dataset(Date from, Date to, const std::string& lang,
                                           std::ostream& out) const {
  std::size_t n = 0;
  if (std::chrono::sys_days{to} < std::chrono::sys_days{from}) return 0;
  for (const auto& day : store_.days(from, to, lang))
    for (auto& s : store_.read_day(day, lang)) {
      out << dataset_record_json(view(std::move(s))).dump() << '\n';
      ++n;
    }
  return n;
}

json::Json cluster_view_json(const ClusterView& view, bool detail) {
  const auto& s = view.stored;
  const Tweet& rep = s.representative();
  json::Json parts = json::Json::array();
  for (const auto& p : parts_pointed_out(rep)) parts.push_back({{"kind", p.kind}, {"value", p.value}});
  json::Json j{{"cluster_id", s.ranked.cluster.cluster_id},
               {"date", format_date(s.date)},
               {"lang", s.lang},
               {"position", s.ranked.position},
               {"headline", s.headline()},
               {"debunking_tweet", json::to_json(rep)},
               {"parts_pointed_out", parts},
               {"tally", json::to_json(view.tally)},
               {"label", to_string(view.label)},
               {"size", s.members.size()},
               {"representative_ranks", json::to_json(s.ranked.representative_ranks)}};
  if (detail) {
    json::Json members = json::Json::array();
    for (const auto& t : s.members) members.push_back(json::to_json(t));
    j["member_tweets"] = members;
    j["cluster"] = json::to_json(s.ranked.cluster);
    j["recrawl_queries"] = generate_recrawl_queries(s.ranked.cluster, s.members);
  }
  return j;
}

json::Json dataset_record_json(const ClusterView& view) {
  const auto& s = view.stored;
  json::Json members = json::Json::array();
  for (const auto& t : s.members) members.push_back(json::to_json(t));
  return json::Json{{"cluster_id", s.ranked.cluster.cluster_id},
                    {"date", format_date(s.date)},
                    {"lang", s.lang},
                    {"position", s.ranked.position},
                    {"label", to_string(view.label)},
                    {"headline", s.headline()},
                    {"representative_tweet", json::to_json(s.representative())},
                    {"member_tweets", members},
                    {"recrawl_queries", generate_recrawl_queries(s.ranked.cluster, s.members)},
                    {"vote_tally", json::to_json(view.tally)}};
}

}  // namespace debunk
