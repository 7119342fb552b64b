#include "debunk/json_codec.hpp"

namespace debunk::json {

Json to_json(const Tweet& t) { return Json::parse(serialize_tweet(t)); }

Tweet tweet_from_json(const Json& j) { return parse_tweet(j.dump(), {}); }

Json to_json(const EventPhrase& p) {
  Json tokens = Json::array();
  for (const auto& r : p.token_indices) tokens.push_back(Json::array({r.sentence, r.index}));
  return Json{{"tweet_id", p.tweet_id},
              {"text", p.text},
              {"words", p.words},
              {"tokens", tokens},
              {"hop_count", p.hop_count}};
}

EventPhrase phrase_from_json(const Json& j) {
  EventPhrase p;
  p.tweet_id = j.at("tweet_id").get<std::string>();
  p.text = j.at("text").get<std::string>();
  p.words = j.at("words").get<std::vector<std::string>>();
  for (const auto& r : j.at("tokens"))
    p.token_indices.push_back(TokenRef{r.at(0).get<std::size_t>(), r.at(1).get<int>()});
  p.hop_count = j.at("hop_count").get<int>();
  return p;
}

Json to_json(const LinkEvidence& e) {
  Json j{{"a", e.a}, {"b", e.b}, {"reason", to_string(e.reason)}};
  if (e.distance) j["distance"] = *e.distance;
  return j;
}

LinkEvidence evidence_from_json(const Json& j) {
  LinkEvidence e;
  e.a = j.at("a").get<std::string>();
  e.b = j.at("b").get<std::string>();
  e.reason = link_reason_from_string(j.at("reason").get<std::string>());
  if (auto it = j.find("distance"); it != j.end()) e.distance = it->get<double>();
  return e;
}

Json to_json(const EventCluster& c) {
  Json phrases = Json::object();
  for (const auto& [id, p] : c.phrases) phrases[id] = to_json(p);
  Json evidence = Json::array();
  for (const auto& e : c.link_evidence) evidence.push_back(to_json(e));
  return Json{{"cluster_id", c.cluster_id},
              {"tweet_ids", c.tweet_ids},
              {"phrases", phrases},
              {"link_evidence", evidence}};
}

EventCluster cluster_from_json(const Json& j) {
  EventCluster c;
  c.cluster_id = j.at("cluster_id").get<std::string>();
  c.tweet_ids = j.at("tweet_ids").get<std::vector<std::string>>();
  for (const auto& [id, p] : j.at("phrases").items()) c.phrases.emplace(id, phrase_from_json(p));
  for (const auto& e : j.at("link_evidence")) c.link_evidence.push_back(evidence_from_json(e));
  return c;
}

Json to_json(const FeatureRanks& r) {
  return Json{{"tweet_id", r.tweet_id},
              {"like_rank", r.like_rank},
              {"retweet_rank", r.retweet_rank},
              {"public_rank", r.public_rank},
              {"avg_rank", r.avg_rank}};
}

FeatureRanks ranks_from_json(const Json& j) {
  return FeatureRanks{j.at("tweet_id").get<std::string>(), j.at("like_rank").get<int>(),
                      j.at("retweet_rank").get<int>(), j.at("public_rank").get<int>(),
                      j.at("avg_rank").get<double>()};
}

Json to_json(const RankedCluster& r) {
  return Json{{"position", r.position},
              {"representative_tweet_id", r.representative_tweet_id},
              {"representative_ranks", to_json(r.representative_ranks)},
              {"cluster", to_json(r.cluster)}};
}

RankedCluster ranked_from_json(const Json& j) {
  RankedCluster r;
  r.position = j.at("position").get<int>();
  r.representative_tweet_id = j.at("representative_tweet_id").get<std::string>();
  r.representative_ranks = ranks_from_json(j.at("representative_ranks"));
  r.cluster = cluster_from_json(j.at("cluster"));
  return r;
}

Json to_json(const StoredCluster& s) {
  Json members = Json::array();
  for (const auto& t : s.members) members.push_back(to_json(t));
  return Json{{"date", format_date(s.date)},
              {"lang", s.lang},
              {"ranked", to_json(s.ranked)},
              {"members", members}};
}

StoredCluster stored_from_json(const Json& j) {
  StoredCluster s;
  s.date = parse_date(j.at("date").get<std::string>());
  s.lang = j.at("lang").get<std::string>();
  s.ranked = ranked_from_json(j.at("ranked"));
  for (const auto& t : j.at("members")) s.members.push_back(tweet_from_json(t));
  return s;
}

Json to_json(const Tally& t) { return Json{{"fake", t.fake}, {"not_fake", t.not_fake}}; }

}  // namespace debunk::json
