#pragma once

#include <optional>
#include <string>
#include <vector>

#include "debunk/conllu.hpp"
#include "debunk/language.hpp"
#include "debunk/pattern.hpp"

namespace debunk {

// The matched debunking pattern projected onto the parse.
struct FakePart {
  std::size_t sentence_index = 0;  // 0-based
  UdToken head_token;
  std::vector<UdToken> span_tokens;
  // Set when no span token had a head outside the span and the shallowest
  // token was used instead.
  bool fragmented = false;
};

struct TokenRef {
  std::size_t sentence = 0;  // 0-based
  int index = 0;

  friend bool operator==(const TokenRef&, const TokenRef&) = default;
  friend auto operator<=>(const TokenRef&, const TokenRef&) = default;
};

struct EventPhrase {
  std::string tweet_id;
  std::string text;
  std::vector<TokenRef> token_indices;
  std::vector<std::string> words;  // token forms in surface order
  int hop_count = 0;               // 1 when found in the adjacent sentence

  friend bool operator==(const EventPhrase&, const EventPhrase&) = default;
};

// Throws Error when the span overlaps no token.
FakePart locate_fake_part(const DependencyDocument& doc, const MatchSpan& span);

std::optional<EventPhrase> extract_event_phrase(const DependencyDocument& doc,
                                                const FakePart& fake,
                                                const LanguageProfile& profile);

// Indices of the head-closure of `index`, ascending.
std::vector<int> subtree_indices(const Sentence& sentence, int index);

std::string subtree_yield(const Sentence& sentence, int index, const std::string& separator);

// Distance from the sentence root (root = 0).
int token_depth(const Sentence& sentence, int index);

// Runs every match span of the tweet through locate + extract and returns the
// first phrase found.
std::optional<EventPhrase> extract_from_matches(const DependencyDocument& doc,
                                                const std::vector<MatchSpan>& spans,
                                                const LanguageProfile& profile);

}  // namespace debunk
