#include "debunk/archive.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "debunk/url.hpp"

namespace debunk {

const char* to_string(Verdict v) { return v == Verdict::Fake ? "fake" : "not_fake"; }

const char* to_string(Label l) {
  switch (l) {
    case Label::Fake:
      return "fake";
    case Label::NotFake:
      return "not_fake";
    case Label::Unverified:
      return "unverified";
  }
  return "unverified";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "fake") return Verdict::Fake;
  if (s == "not_fake") return Verdict::NotFake;
  throw Error("verdict must be 'fake' or 'not_fake', got '" + s + "'");
}

Label derive_label(const Tally& tally, const LabelPolicy& policy) {
  const auto total = tally.total();
  if (total == 0 || total < policy.min_votes) return Label::Unverified;
  const auto top = std::max(tally.fake, tally.not_fake);
  if (tally.fake == tally.not_fake) return Label::Unverified;
  if (static_cast<double>(top) < policy.min_majority * static_cast<double>(total))
    return Label::Unverified;
  return tally.fake > tally.not_fake ? Label::Fake : Label::NotFake;
}

const Tweet* StoredCluster::member(const std::string& id) const {
  auto it = std::lower_bound(members.begin(), members.end(), id,
                             [](const Tweet& t, const std::string& key) { return t.id < key; });
  return it != members.end() && it->id == id ? &*it : nullptr;
}

const Tweet& StoredCluster::representative() const {
  const Tweet* t = member(ranked.representative_tweet_id);
  if (!t) throw NotFound("representative " + ranked.representative_tweet_id + " missing");
  return *t;
}

std::string StoredCluster::headline() const {
  const auto& phrases = ranked.cluster.phrases;
  if (auto it = phrases.find(ranked.representative_tweet_id); it != phrases.end())
    return it->second.text;
  return phrases.empty() ? std::string{} : phrases.begin()->second.text;
}

std::vector<PartPointedOut> parts_pointed_out(const Tweet& t) {
  std::vector<PartPointedOut> out;
  for (const auto& u : t.urls) out.push_back({"url", u});
  if (t.quote_of_id) out.push_back({"quote", *t.quote_of_id});
  if (t.reply_to_id) out.push_back({"reply", *t.reply_to_id});
  return out;
}

std::vector<std::string> generate_recrawl_queries(const EventCluster& cluster,
                                                  const std::vector<Tweet>& members) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](std::string q) {
    if (seen.insert(q).second) out.push_back(std::move(q));
  };
  std::map<std::string, const Tweet*> by_id;
  for (const auto& t : members) by_id.emplace(t.id, &t);
  for (const auto& id : cluster.tweet_ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) continue;
    for (const auto& u : it->second->urls) add("url:" + normalize_url(u));
  }
  for (const auto& id : cluster.tweet_ids) {
    auto it = cluster.phrases.find(id);
    if (it == cluster.phrases.end()) continue;
    std::string phrase = it->second.text;
    phrase.erase(std::remove(phrase.begin(), phrase.end(), '"'), phrase.end());
    if (!phrase.empty()) add("\"" + phrase + "\"");
  }
  return out;
}

double cohen_kappa(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size())
    throw Error("label lists differ in length (" + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()) + ")");
  if (a.empty()) throw Error("cannot compute kappa over empty label lists");
  const double n = static_cast<double>(a.size());
  std::map<std::string, double> ca, cb;
  double agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1;
    cb[b[i]] += 1;
    if (a[i] == b[i]) agree += 1;
  }
  const double po = agree / n;
  double pe = 0;
  for (const auto& [label, count] : ca)
    if (auto it = cb.find(label); it != cb.end()) pe += (count / n) * (it->second / n);
  if (pe >= 1.0) return po >= 1.0 ? 1.0 : 0.0;
  return (po - pe) / (1.0 - pe);
}

}  // namespace debunk
