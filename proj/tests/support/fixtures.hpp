#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "debunk/config.hpp"
#include "debunk/conllu.hpp"
#include "debunk/corpus.hpp"
#include "debunk/embedding.hpp"
#include "debunk/json_codec.hpp"
#include "debunk/pipeline.hpp"

namespace fixtures {

std::string dir();
std::string read(const std::string& name);

struct ExtractionCase {
  std::string id;
  std::string lang;
  std::string text;
  std::optional<std::string> expected;
  debunk::DependencyDocument doc;
};

// Cases from extraction_cases.conllu. Metadata comments per block:
// "# lang", "# tweet_text", "# expected" ("<none>" when nothing should come out).
std::vector<ExtractionCase> extraction_cases();

// Match the shipped patterns, locate, extract.
std::optional<std::string> run_extraction(const ExtractionCase& c, const debunk::Config& cfg,
                                          const debunk::PatternSet& patterns);

// Pattern source -> (a sentence it must match, one it must not).
std::map<std::string, std::pair<std::string, std::string>> shipped_pattern_probes();

// The synthetic day in e2e/: 500 tweets with five planted events, their
// parses, a 1-D embedding and the expected clusters from the generator.
struct EndToEnd {
  std::vector<debunk::Tweet> tweets;
  debunk::DailyBatch day;  // 2019-12-07, en
  std::map<std::string, debunk::DependencyDocument> parses;
  debunk::EmbeddingTable table{1};
  debunk::json::Json expected;
};

EndToEnd load_end_to_end();

debunk::ArchiveResult run_end_to_end(const EndToEnd& e, const debunk::Config& cfg);

}  // namespace fixtures
