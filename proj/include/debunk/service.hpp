#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "debunk/archive.hpp"
#include "debunk/json_codec.hpp"
#include "debunk/store.hpp"

namespace debunk {

// What a reviewer sees for one cluster.
struct ClusterView {
  StoredCluster stored;
  Tally tally;
  Label label = Label::Unverified;
};

class ArchiveService {
 public:
  ArchiveService(ArchiveStore& store, LabelPolicy policy = {}) : store_(store), policy_(policy) {}

  // Replaces the day's clusters; votes are kept by cluster id. Positions are
  // renumbered 1..n in the given order.
  void persist_batch(Date date, const std::string& lang, std::vector<StoredCluster> clusters);

  // Throws Error for limit < 1. Unknown days give an empty list.
  std::vector<ClusterView> get_top_clusters(Date date, const std::string& lang,
                                            std::size_t limit = 10) const;
  std::optional<ClusterView> get_cluster(const std::string& cluster_id) const;

  // Throws NotFound for an unknown cluster.
  Tally record_vote(const Vote& vote);

  // One line per cluster, ordered by (date, position). Returns the count.
  std::size_t export_dataset(Date from, Date to, const std::string& lang, std::ostream& out) const;

  const LabelPolicy& policy() const { return policy_; }
  ArchiveStore& store() { return store_; }

 private:
  ClusterView view(StoredCluster stored) const;

  ArchiveStore& store_;
  LabelPolicy policy_;
};

// API shape of a cluster. `detail` adds member tweets, phrases and link evidence.
json::Json cluster_view_json(const ClusterView& view, bool detail);

// One exported dataset record.
json::Json dataset_record_json(const ClusterView& view);

}  // namespace debunk
