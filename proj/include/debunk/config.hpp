#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "debunk/clusterer.hpp"
#include "debunk/language.hpp"
#include "debunk/pattern.hpp"
#include "debunk/timeutil.hpp"

namespace debunk {

struct LabelPolicy {
  std::uint64_t min_votes = 5;
  double min_majority = 0.6;
};

struct PipelineSettings {
  std::uint64_t min_shares_exclusive = 3;
  TzOffset timezone;
  GroupingOptions grouping;
};

struct ServeSettings {
  int port = 8080;
  std::string data_dir = "data";
  std::size_t top_limit = 10;
  std::string static_dir;
};

// Everything the pipeline and service read at startup.
//
// File layout (INI-like, ';' starts a comment line):
//   [pipeline]        min_shares_exclusive, timezone, tau, centroid_prefilter,
//                     max_pairs (0 = unlimited), threads
//   [labels]          min_votes, min_majority
//   [serve]           port, data_dir, top_limit, static_dir
//   [language <xx>]   word_boundaries, hop (following|preceding), separator,
//                     demonstratives, relations (comma lists), embeddings
//   [patterns <xx>]   one pattern per line, taken verbatim
// Values may be double-quoted to keep surrounding spaces.
struct Config {
  PipelineSettings pipeline;
  LabelPolicy labels;
  ServeSettings serve;
  std::map<std::string, LanguageProfile> languages;
  std::map<std::string, std::string> embeddings;  // lang -> path
  std::vector<PatternSpec> patterns;

  std::set<std::string> language_codes() const;
  // Configured profile, or LanguageProfile::defaults_for(lang).
  LanguageProfile profile(const std::string& lang) const;
  // Throws PatternSyntaxError for the first bad pattern.
  PatternSet compile_patterns() const;
};

// Throws ParseError with the line number of the first bad line.
Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

// The shipped defaults (the same text as config/default.ini).
const std::string& default_config_text();
Config default_config();

}  // namespace debunk
