#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "debunk/error.hpp"

namespace debunk {

struct UdToken {
  int index = 0;  // 1-based within the sentence
  std::string form;
  std::string lemma = "_";
  std::string upos = "_";
  int head = 0;  // 0 = ROOT
  std::string deprel;
  std::size_t char_start = 0;  // code points into the tweet text
  std::size_t char_end = 0;

  friend bool operator==(const UdToken&, const UdToken&) = default;
};

struct Sentence {
  std::string text;  // "# text = " comment when present
  std::vector<UdToken> tokens;

  // Token with the given 1-based index. Precondition: 1 <= index <= size.
  const UdToken& at(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct DependencyDocument {
  std::string tweet_id;
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
  friend bool operator==(const DependencyDocument&, const DependencyDocument&) = default;
};

class ConlluError : public ParseError {
 public:
  ConlluError(const std::string& what, std::size_t sentence, std::size_t line)
      : ParseError("sentence " + std::to_string(sentence) + ": " + what, line),
        sentence_(sentence) {}
  std::size_t sentence() const noexcept { return sentence_; }

 private:
  std::size_t sentence_;
};

// Parses one document. Multiword-token ranges and empty nodes are skipped.
// Offsets come from TokenRange=s:e or start_char=s|end_char=e in MISC when
// every token has one; otherwise forms are aligned left to right against
// raw_text (or, without raw_text, against the text rebuilt from forms and
// SpaceAfter=No). Throws ConlluError on malformed lines, bad heads, cycles,
// root count, or alignment failure.
DependencyDocument parse_conllu(std::string_view text, const std::string& tweet_id,
                                const std::optional<std::string>& raw_text = std::nullopt);

struct TreeDiagnostic {
  std::size_t sentence = 0;  // 1-based
  std::string message;
};

// Empty iff every token and tree invariant holds. One diagnostic per
// violated sentence-level property (root count, each cycle) and per bad token.
std::vector<TreeDiagnostic> validate_tree(const DependencyDocument& doc);

// Writes CoNLL-U with "# tweet_id" and TokenRange offsets; parse_conllu on
// the result reproduces doc.
std::string serialize_conllu(const DependencyDocument& doc);

struct ConlluCorpus {
  std::map<std::string, DependencyDocument> documents;
  std::vector<std::string> diagnostics;
};

// A sidecar file of many parses, each introduced by "# tweet_id = <id>".
// raw_text maps a tweet id to its text for offset alignment; it may return
// nullopt. A bad block is reported and skipped.
ConlluCorpus parse_conllu_corpus(
    std::string_view text,
    const std::function<std::optional<std::string>(const std::string&)>& raw_text = {});

}  // namespace debunk
