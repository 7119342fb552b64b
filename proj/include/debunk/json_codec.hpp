#pragma once

#include <nlohmann/json.hpp>

#include "debunk/archive.hpp"

namespace debunk::json {

using Json = nlohmann::ordered_json;

Json to_json(const Tweet& t);
Tweet tweet_from_json(const Json& j);

Json to_json(const EventPhrase& p);
EventPhrase phrase_from_json(const Json& j);

Json to_json(const LinkEvidence& e);
LinkEvidence evidence_from_json(const Json& j);

Json to_json(const EventCluster& c);
EventCluster cluster_from_json(const Json& j);

Json to_json(const FeatureRanks& r);
FeatureRanks ranks_from_json(const Json& j);

Json to_json(const RankedCluster& r);
RankedCluster ranked_from_json(const Json& j);

Json to_json(const StoredCluster& s);
StoredCluster stored_from_json(const Json& j);

Json to_json(const Tally& t);

}  // namespace debunk::json
