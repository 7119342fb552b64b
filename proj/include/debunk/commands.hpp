#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "debunk/config.hpp"
#include "debunk/pipeline.hpp"
#include "debunk/store.hpp"

namespace debunk {

struct CrawlReport {
  std::size_t loaded = 0;
  std::size_t stored = 0;  // tweets matching a debunking pattern
  std::size_t retweets_collapsed = 0;
  std::vector<Diagnostic> diagnostics;
};

// Reads a record file and stores the tweets that match a configured pattern.
CrawlReport crawl_file(const Config& cfg, const std::filesystem::path& source, ArchiveStore& store);

struct ArchiveReport {
  ArchiveStats stats;
  std::vector<std::string> warnings;  // parse diagnostics, missing embeddings
};

// Archives one local day of stored tweets and persists the ranked clusters.
// Empty paths: no parses (phrase links off) / embeddings from cfg, else none.
ArchiveReport archive_day(const Config& cfg, ArchiveStore& store, Date date, const std::string& lang,
                          const std::filesystem::path& parses, const std::filesystem::path& embeddings);

// --patterns files use the config format; their pattern sections replace the
// configured patterns and their language sections override profiles.
void apply_pattern_file(Config& cfg, const std::filesystem::path& path);

}  // namespace debunk
