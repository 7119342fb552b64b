#pragma once

#include <set>
#include <string>

namespace debunk {

enum class HopDirection { Following, Preceding };

// Per-language knobs for matching and extraction. Everything here is loaded
// from configuration; a new language needs a profile and patterns only.
struct LanguageProfile {
  std::string lang;
  bool word_boundaries = true;
  HopDirection hop = HopDirection::Following;
  std::string token_separator = " ";
  std::set<std::string> demonstratives;  // compared after case folding
  std::set<std::string> relations;       // dependency labels that link a phrase

  static LanguageProfile english();
  static LanguageProfile japanese();
  // english() or japanese() for "en"/"ja"; an English-like profile otherwise.
  static LanguageProfile defaults_for(const std::string& lang);
};

}  // namespace debunk
