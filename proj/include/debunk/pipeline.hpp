#pragma once

#include <map>
#include <string>
#include <vector>

#include "debunk/archive.hpp"
#include "debunk/config.hpp"
#include "debunk/conllu.hpp"
#include "debunk/embedding.hpp"
#include "debunk/pattern.hpp"

namespace debunk {

struct ArchiveStats {
  std::size_t input_tweets = 0;
  std::size_t after_share_filter = 0;
  std::size_t matched = 0;
  std::size_t parsed = 0;
  std::size_t phrases = 0;
  std::size_t clusters = 0;
  GroupingStats grouping;
  std::vector<std::string> diagnostics;
};

struct ArchiveResult {
  std::vector<StoredCluster> clusters;  // position order
  std::map<std::string, EventPhrase> phrases;
  ArchiveStats stats;
};

// One day of one language: share filter, pattern match, phrase extraction
// from the supplied parses, grouping, ranking. Only tweets that match a
// pattern are clustered; those without a parse or a phrase still take part
// in URL and reply grouping.
ArchiveResult archive_batch(const DailyBatch& batch,
                            const std::map<std::string, DependencyDocument>& parses,
                            const PatternSet& patterns, const LanguageProfile& profile,
                            const EmbeddingTable& table, const PipelineSettings& settings);

// UTC interval [start, end) covering a local calendar day.
std::pair<Timestamp, Timestamp> day_bounds(Date date, TzOffset tz);

}  // namespace debunk
