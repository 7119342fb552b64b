#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "debunk/error.hpp"

namespace debunk {

// A debunking pattern: literal text with "(a|b)" alternation and "(x)"
// optional groups. Groups nest. A backslash escapes the next character.
// Whitespace in a pattern matches any run of whitespace in text.
struct PatternSpec {
  std::string lang;
  std::string source;

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

class PatternSyntaxError : public Error {
 public:
  PatternSyntaxError(const std::string& message, std::size_t offset)
      : Error("pattern offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct MatchSpan {
  PatternSpec pattern;
  std::size_t start = 0;  // code points, inclusive
  std::size_t end = 0;    // code points, exclusive
  std::string matched_text;

  friend bool operator==(const MatchSpan&, const MatchSpan&) = default;
};

// Every literal string the pattern accepts, whitespace collapsed and trimmed,
// duplicates removed, first occurrence order (absent-before-present for
// optional groups, listed order for alternatives). Throws PatternSyntaxError
// beyond one million distinct strings; compile_pattern has no such limit.
std::vector<std::string> expand_alternations(const PatternSpec& spec);

// Word-boundary default per language: unsegmented scripts (ja, zh, th) match
// as substrings, everything else must sit on word boundaries.
bool default_word_boundaries(const std::string& lang);

// Compiled to a small automaton over folded code points, so patterns with
// very many expansions still compile.
class CompiledPattern {
 public:
  const PatternSpec& spec() const { return spec_; }
  bool word_boundaries() const { return word_boundaries_; }

  // Non-overlapping matches, leftmost first; at each start the longest
  // accepted string that satisfies the boundary rule wins.
  std::vector<MatchSpan> match(const std::string& text) const;

  // Same as match() but over pre-decoded, pre-folded text.
  std::vector<MatchSpan> match_folded(const std::u32string& folded,
                                      const std::u32string& original) const;

  struct Edge {
    char32_t label;  // kEpsilon, kSpace or a folded code point
    std::uint32_t to;
  };
  static constexpr char32_t kEpsilon = 0;
  static constexpr char32_t kSpace = 0xFFFFFFFF;  // one whitespace run

 private:
  friend CompiledPattern compile_pattern(const PatternSpec&, bool);
  std::size_t longest_from(const std::u32string& text, std::size_t start) const;

  PatternSpec spec_;
  bool word_boundaries_ = true;
  std::vector<std::vector<Edge>> states_;  // state 0 is the start
  std::uint32_t accept_ = 0;
};

CompiledPattern compile_pattern(const PatternSpec& spec, bool word_boundaries);
CompiledPattern compile_pattern(const PatternSpec& spec);

std::vector<MatchSpan> match_text(const CompiledPattern& pattern, const std::string& text);

// All patterns registered for one or more languages.
class PatternSet {
 public:
  void add(CompiledPattern pattern);

  // Matches from every pattern of `lang`, resolved to a non-overlapping set:
  // sorted by start, longer first, then pattern source. Independent of the
  // order patterns were added.
  std::vector<MatchSpan> match(const std::string& lang, const std::string& text) const;

  bool any_match(const std::string& lang, const std::string& text) const;
  std::size_t size() const;
  const std::vector<CompiledPattern>& patterns(const std::string& lang) const;

 private:
  std::map<std::string, std::vector<CompiledPattern>> by_lang_;
};

}  // namespace debunk
