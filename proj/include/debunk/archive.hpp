#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "debunk/clusterer.hpp"
#include "debunk/config.hpp"
#include "debunk/corpus.hpp"
#include "debunk/ranker.hpp"

namespace debunk {

enum class Verdict { Fake, NotFake };
enum class Label { Fake, NotFake, Unverified };

const char* to_string(Verdict v);
const char* to_string(Label l);
Verdict verdict_from_string(const std::string& s);  // "fake" | "not_fake"

struct Vote {
  std::string cluster_id;
  std::string voter_id;
  Verdict verdict = Verdict::Fake;
  Timestamp cast_at{};
};

struct Tally {
  std::uint64_t fake = 0;
  std::uint64_t not_fake = 0;

  std::uint64_t total() const { return fake + not_fake; }
  friend bool operator==(const Tally&, const Tally&) = default;
};

// Fake or NotFake once there are at least min_votes votes and the majority
// side holds at least min_majority of them; Unverified otherwise.
Label derive_label(const Tally& tally, const LabelPolicy& policy = {});

// A ranked cluster as archived for one (date, lang), with the member tweets
// needed to render it later.
struct StoredCluster {
  Date date;
  std::string lang;
  RankedCluster ranked;
  std::vector<Tweet> members;  // sorted by id

  const Tweet* member(const std::string& id) const;
  const Tweet& representative() const;
  // Representative's event phrase, else the phrase of the smallest member id
  // that has one, else empty.
  std::string headline() const;
};

struct PartPointedOut {
  std::string kind;  // url | quote | reply
  std::string value;

  friend bool operator==(const PartPointedOut&, const PartPointedOut&) = default;
};

std::vector<PartPointedOut> parts_pointed_out(const Tweet& t);

// "url:<normalized url>" for every member URL, then each distinct event
// phrase as a double-quoted keyword query. Duplicates removed, first
// occurrence kept.
std::vector<std::string> generate_recrawl_queries(const EventCluster& cluster,
                                                  const std::vector<Tweet>& members);

// Cohen's kappa over two equally long, non-empty label sequences.
// Throws Error on a length mismatch or empty input.
double cohen_kappa(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace debunk
