#include "debunk/extractor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "debunk/utf8.hpp"

namespace debunk {
namespace {

std::string base_label(const std::string& deprel) {
  return deprel.substr(0, deprel.find(':'));
}

// UD v2 renamed dobj to obj; both spellings are accepted.
bool relation_matches(const std::string& deprel, const std::set<std::string>& relations) {
  if (relations.count(deprel)) return true;
  std::string base = base_label(deprel);
  if (relations.count(base)) return true;
  return base == "obj" && relations.count("dobj");
}

bool function_word(const UdToken& t) {
  static const std::set<std::string> kinds{"case", "punct", "mark", "cop", "aux", "discourse", "cc"};
  return kinds.count(base_label(t.deprel)) > 0;
}

int root_index(const Sentence& s) {
  for (const auto& t : s.tokens)
    if (t.head == 0) return t.index;
  return 0;
}

struct Candidate {
  int index;
  std::vector<int> subtree;
};

// Rule 2 over the dependents of `fake` in `s`: a linking relation, strictly
// before `anchor`, not a demonstrative standing alone (particles and
// punctuation aside). The candidate whose subtree reaches closest to the
// anchor wins; ties go to the later token. Tokens of the fake part never
// enter a phrase.
std::optional<Candidate> best_candidate(const Sentence& s, int fake, int anchor,
                                        const std::set<int>& excluded,
                                        const LanguageProfile& profile) {
  std::optional<Candidate> best;
  std::tuple<int, int> best_key{-1, -1};
  for (const auto& t : s.tokens) {
    if (t.head != fake || t.index >= anchor || excluded.count(t.index)) continue;
    if (!relation_matches(t.deprel, profile.relations)) continue;
    std::vector<int> sub;
    for (int i : subtree_indices(s, t.index))
      if (!excluded.count(i)) sub.push_back(i);
    if (profile.demonstratives.count(utf8::fold_utf8(t.form))) {
      bool bare = std::all_of(sub.begin(), sub.end(),
                              [&](int i) { return i == t.index || function_word(s.at(i)); });
      if (bare) continue;
    }
    int reach = 0;
    for (int i : sub)
      if (i < anchor) reach = std::max(reach, i);
    std::tuple<int, int> key{reach, t.index};
    if (!best || key > best_key) {
      best_key = key;
      best = Candidate{t.index, std::move(sub)};
    }
  }
  return best;
}

}  // namespace

std::vector<int> subtree_indices(const Sentence& sentence, int index) {
  const int n = static_cast<int>(sentence.tokens.size());
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  for (const auto& t : sentence.tokens)
    if (t.head >= 0 && t.head <= n) children[static_cast<std::size_t>(t.head)].push_back(t.index);
  std::vector<int> out;
  std::vector<int> stack{index};
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    if (cur < 1 || cur > n || seen[static_cast<std::size_t>(cur)]) continue;
    seen[static_cast<std::size_t>(cur)] = true;
    out.push_back(cur);
    for (int c : children[static_cast<std::size_t>(cur)]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string subtree_yield(const Sentence& sentence, int index, const std::string& separator) {
  std::string out;
  bool first = true;
  for (int i : subtree_indices(sentence, index)) {
    if (!first) out += separator;
    out += sentence.at(i).form;
    first = false;
  }
  return out;
}

int token_depth(const Sentence& sentence, int index) {
  int depth = 0;
  int cur = index;
  const int n = static_cast<int>(sentence.tokens.size());
  while (cur >= 1 && cur <= n && sentence.at(cur).head != 0) {
    cur = sentence.at(cur).head;
    if (++depth > n) break;  // cyclic input; validated documents never get here
  }
  return depth;
}

FakePart locate_fake_part(const DependencyDocument& doc, const MatchSpan& span) {
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    const auto& s = doc.sentences[si];
    std::vector<UdToken> covered;
    for (const auto& t : s.tokens)
      if (t.char_start < span.end && t.char_end > span.start) covered.push_back(t);
    if (covered.empty()) continue;

    std::set<int> inside;
    for (const auto& t : covered) inside.insert(t.index);
    FakePart part;
    part.sentence_index = si;
    part.span_tokens = covered;
    const UdToken* best = nullptr;
    int best_depth = 0;
    for (bool require_exit : {true, false}) {
      for (const auto& t : covered) {
        if (require_exit && t.head != 0 && inside.count(t.head)) continue;
        int d = token_depth(s, t.index);
        if (!best || d < best_depth || (d == best_depth && t.index < best->index)) {
          best = &t;
          best_depth = d;
        }
      }
      if (best) {
        part.fragmented = !require_exit;
        break;
      }
    }
    part.head_token = *best;
    return part;
  }
  throw Error("match '" + span.matched_text + "' [" + std::to_string(span.start) + ", " +
              std::to_string(span.end) + ") overlaps no token of tweet " + doc.tweet_id);
}

std::optional<EventPhrase> extract_event_phrase(const DependencyDocument& doc,
                                                const FakePart& fake,
                                                const LanguageProfile& profile) {
  if (fake.sentence_index >= doc.sentences.size()) return std::nullopt;
  std::size_t si = fake.sentence_index;
  int cur = fake.head_token.index;
  int anchor = cur;
  std::set<int> excluded;
  for (const auto& t : fake.span_tokens) {
    anchor = std::min(anchor, t.index);
    excluded.insert(t.index);
  }
  bool hopped = false;

  std::size_t cap = 4;
  for (const auto& s : doc.sentences) cap += 2 * s.tokens.size();

  for (std::size_t step = 0; step < cap; ++step) {
    const Sentence& s = doc.sentences[si];
    if (auto cand = best_candidate(s, cur, anchor, excluded, profile)) {
      EventPhrase phrase;
      phrase.tweet_id = doc.tweet_id;
      phrase.hop_count = hopped ? 1 : 0;
      bool first = true;
      for (int i : cand->subtree) {
        if (!first) phrase.text += profile.token_separator;
        phrase.text += s.at(i).form;
        phrase.words.push_back(s.at(i).form);
        phrase.token_indices.push_back(TokenRef{si, i});
        first = false;
      }
      return phrase;
    }
    int head = s.at(cur).head;
    if (head != 0) {
      cur = head;
      anchor = std::min(anchor, cur);
      continue;
    }
    if (hopped) return std::nullopt;
    if (profile.hop == HopDirection::Following) {
      if (si + 1 >= doc.sentences.size()) return std::nullopt;
      ++si;
    } else {
      if (si == 0) return std::nullopt;
      --si;
    }
    hopped = true;
    cur = root_index(doc.sentences[si]);
    if (cur == 0) return std::nullopt;
    anchor = cur;
    excluded.clear();
  }
  throw std::logic_error("event phrase extraction exceeded its iteration cap for tweet " +
                         doc.tweet_id);
}

std::optional<EventPhrase> extract_from_matches(const DependencyDocument& doc,
                                                const std::vector<MatchSpan>& spans,
                                                const LanguageProfile& profile) {
  for (const auto& span : spans) {
    FakePart part;
    try {
      part = locate_fake_part(doc, span);
    } catch (const Error&) {
      continue;
    }
    if (auto phrase = extract_event_phrase(doc, part, profile)) return phrase;
  }
  return std::nullopt;
}

}  // namespace debunk
