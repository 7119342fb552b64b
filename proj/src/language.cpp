#include "debunk/language.hpp"

namespace debunk {

namespace {
const std::set<std::string> kRelations{"nsubj", "nsubjpass", "dobj", "iobj", "csubj", "appos"};
}

LanguageProfile LanguageProfile::english() {
  LanguageProfile p;
  p.lang = "en";
  p.word_boundaries = true;
  p.hop = HopDirection::Following;
  p.token_separator = " ";
  p.demonstratives = {"this", "that", "it", "these", "those"};
  p.relations = kRelations;
  return p;
}

LanguageProfile LanguageProfile::japanese() {
  LanguageProfile p;
  p.lang = "ja";
  p.word_boundaries = false;
  p.hop = HopDirection::Preceding;
  p.token_separator = "";
  p.demonstratives = {"これ", "それ", "あれ", "こちら"};
  p.relations = kRelations;
  return p;
}

LanguageProfile LanguageProfile::defaults_for(const std::string& lang) {
  if (lang == "ja") return japanese();
  LanguageProfile p = english();
  p.lang = lang;
  if (lang != "en") p.demonstratives.clear();
  return p;
}

}  // namespace debunk
