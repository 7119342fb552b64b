#include "debunk/pattern.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "debunk/utf8.hpp"

namespace debunk {
namespace {

constexpr std::size_t kMaxExpansions = 1000000;

// Parsed pattern tree. A Seq is a list of nodes; a node is a literal code
// point or a group of alternative sequences.
struct Node;
using Seq = std::vector<Node>;
struct Node {
  char32_t literal = 0;
  std::vector<Seq> alternatives;  // empty for literals
  bool is_group() const { return !alternatives.empty(); }
};

class Parser {
 public:
  explicit Parser(std::u32string src) : src_(std::move(src)) {}

  Seq parse() {
    Seq seq = sequence(0);
    if (pos_ < src_.size()) throw PatternSyntaxError("unbalanced ')'", pos_);
    return seq;
  }

 private:
  Seq sequence(int depth) {
    Seq seq;
    while (pos_ < src_.size()) {
      char32_t c = src_[pos_];
      if (c == U')' || c == U'|') {
        if (depth == 0) throw PatternSyntaxError(c == U')' ? "unbalanced ')'" : "'|' outside a group", pos_);
        break;
      }
      if (c == U'(') {
        seq.push_back(group(depth + 1));
        continue;
      }
      if (c == U'\\') {
        if (pos_ + 1 >= src_.size()) throw PatternSyntaxError("dangling escape", pos_);
        ++pos_;
        c = src_[pos_];
      }
      seq.push_back(Node{c, {}});
      ++pos_;
    }
    return seq;
  }

  Node group(int depth) {
    std::size_t open = pos_++;
    Node node;
    while (true) {
      std::size_t alt_start = pos_;
      Seq alt = sequence(depth);
      if (pos_ >= src_.size()) throw PatternSyntaxError("unbalanced '('", open);
      if (alt.empty()) throw PatternSyntaxError("empty alternative", alt_start);
      node.alternatives.push_back(std::move(alt));
      if (src_[pos_] == U')') {
        ++pos_;
        return node;
      }
      ++pos_;  // '|'
    }
  }

  std::u32string src_;
  std::size_t pos_ = 0;
};

// Distinct strings of a sequence in first-occurrence order: the product of
// its nodes taken left to right, deduplicated after every step.
std::vector<std::u32string> expand_seq(const Seq& seq) {
  std::vector<std::u32string> acc{U""};
  for (const Node& node : seq) {
    if (!node.is_group()) {
      for (auto& s : acc) s.push_back(node.literal);
      continue;
    }
    std::vector<std::u32string> pieces;
    std::set<std::u32string> seen_piece;
    if (node.alternatives.size() == 1 && seen_piece.insert(U"").second) pieces.push_back(U"");
    for (const Seq& alt : node.alternatives)
      for (auto& piece : expand_seq(alt))
        if (seen_piece.insert(piece).second) pieces.push_back(std::move(piece));
    std::vector<std::u32string> next;
    std::set<std::u32string> seen;
    for (const auto& prefix : acc)
      for (const auto& piece : pieces) {
        auto s = prefix + piece;
        if (!seen.insert(s).second) continue;
        if (seen.size() > kMaxExpansions) throw PatternSyntaxError("pattern expands to too many strings", 0);
        next.push_back(std::move(s));
      }
    acc = std::move(next);
  }
  return acc;
}

std::u32string collapse_whitespace(const std::u32string& s) {
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : s) {
    if (utf8::is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::u32string> expand_u32(const PatternSpec& spec) {
  std::u32string src = utf8::decode(spec.source);
  Seq root = Parser(src).parse();
  auto raw = expand_seq(root);
  std::vector<std::u32string> out;
  std::set<std::u32string> seen;
  for (auto& s : raw) {
    auto norm = collapse_whitespace(s);
    if (norm.empty()) throw PatternSyntaxError("pattern can match the empty string", 0);
    if (seen.insert(norm).second) out.push_back(std::move(norm));
  }
  if (out.empty()) throw PatternSyntaxError("pattern is empty", 0);
  return out;
}

}  // namespace

std::vector<std::string> expand_alternations(const PatternSpec& spec) {
  std::vector<std::string> out;
  for (const auto& s : expand_u32(spec)) out.push_back(utf8::encode(s));
  return out;
}

bool default_word_boundaries(const std::string& lang) {
  return !(lang == "ja" || lang == "zh" || lang == "th");
}

CompiledPattern compile_pattern(const PatternSpec& spec, bool word_boundaries) {
  using Edge = CompiledPattern::Edge;
  Seq root = Parser(utf8::decode(spec.source)).parse();
  if (root.empty()) throw PatternSyntaxError("pattern is empty", 0);
  CompiledPattern p;
  p.spec_ = spec;
  p.word_boundaries_ = word_boundaries;
  auto& states = p.states_;
  auto fresh = [&] {
    states.emplace_back();
    return static_cast<std::uint32_t>(states.size() - 1);
  };
  std::function<std::uint32_t(const Seq&, std::uint32_t)> build = [&](const Seq& seq, std::uint32_t cur) {
    for (const Node& node : seq) {
      if (!node.is_group()) {
        char32_t label = utf8::is_space(node.literal) ? CompiledPattern::kSpace : utf8::fold(node.literal);
        auto next = fresh();
        states[cur].push_back(Edge{label, next});
        cur = next;
        continue;
      }
      auto end = fresh();
      for (const Seq& alt : node.alternatives) {
        auto a = fresh();
        states[cur].push_back(Edge{CompiledPattern::kEpsilon, a});
        auto e = build(alt, a);
        states[e].push_back(Edge{CompiledPattern::kEpsilon, end});
      }
      if (node.alternatives.size() == 1) states[cur].push_back(Edge{CompiledPattern::kEpsilon, end});
      cur = end;
    }
    return cur;
  };
  fresh();
  p.accept_ = build(root, 0);

  // accepting through epsilon and space edges alone means the empty string
  std::vector<bool> seen(states.size());
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    if (q == p.accept_) throw PatternSyntaxError("pattern can match the empty string", 0);
    for (const auto& e : states[q])
      if ((e.label == CompiledPattern::kEpsilon || e.label == CompiledPattern::kSpace) && !seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
  }
  return p;
}

CompiledPattern compile_pattern(const PatternSpec& spec) {
  return compile_pattern(spec, default_word_boundaries(spec.lang));
}

// Simulates the automaton from `start`. A configuration is (state, pending)
// where pending records a space edge taken since the last consumed code point:
// the next literal must then be preceded by a whitespace run in the text.
// Space edges before the first literal are dropped, as are trailing ones.
// Returns the end of the longest accepted match, or `start` when none.
std::size_t CompiledPattern::longest_from(const std::u32string& text, std::size_t start) const {
  const std::size_t n = text.size(), m = states_.size();
  auto boundary_ok = [&](std::size_t end) {
    return !word_boundaries_ || end >= n || !utf8::is_word_char(text[end - 1]) || !utf8::is_word_char(text[end]);
  };
  std::map<std::size_t, std::vector<char>> frontier;
  frontier[start].assign(2 * m, 0);
  frontier[start][0] = 1;
  std::size_t best = start;
  while (!frontier.empty()) {
    auto node = frontier.begin();
    const std::size_t k = node->first;
    std::vector<char> on = std::move(node->second);
    frontier.erase(node);
    std::vector<std::size_t> work;
    for (std::size_t c = 0; c < on.size(); ++c)
      if (on[c]) work.push_back(c);
    while (!work.empty()) {
      auto c = work.back();
      work.pop_back();
      std::size_t q = c / 2;
      bool pending = c % 2;
      for (const auto& e : states_[q]) {
        if (e.label != kEpsilon && e.label != kSpace) continue;
        bool p = pending || (e.label == kSpace && k > start);
        std::size_t d = e.to * 2 + (p ? 1 : 0);
        if (!on[d]) {
          on[d] = 1;
          work.push_back(d);
        }
      }
    }
    if (k > start && (on[accept_ * 2] || on[accept_ * 2 + 1]) && boundary_ok(k)) best = std::max(best, k);
    std::size_t after_run = k;
    while (after_run < n && utf8::is_space(text[after_run])) ++after_run;
    for (std::size_t c = 0; c < on.size(); ++c) {
      if (!on[c]) continue;
      bool pending = c % 2;
      std::size_t at = pending ? after_run : k;
      if (at >= n || (pending && at == k)) continue;
      for (const auto& e : states_[c / 2]) {
        if (e.label == kEpsilon || e.label == kSpace || e.label != text[at]) continue;
        auto& next = frontier[at + 1];
        if (next.empty()) next.assign(2 * m, 0);
        next[e.to * 2] = 1;
      }
    }
  }
  return best;
}

std::vector<MatchSpan> CompiledPattern::match_folded(const std::u32string& text,
                                                     const std::u32string& original) const {
  std::vector<MatchSpan> spans;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (utf8::is_space(text[i]) ||
        (word_boundaries_ && i > 0 && utf8::is_word_char(text[i]) && utf8::is_word_char(text[i - 1]))) {
      ++i;
      continue;
    }
    std::size_t end = longest_from(text, i);
    if (end == i) {
      ++i;
      continue;
    }
    spans.push_back(MatchSpan{spec_, i, end, utf8::encode(std::u32string_view(original).substr(i, end - i))});
    i = end;
  }
  return spans;
}

std::vector<MatchSpan> CompiledPattern::match(const std::string& text) const {
  auto original = utf8::decode(text);
  return match_folded(utf8::fold(original), original);
}

std::vector<MatchSpan> match_text(const CompiledPattern& pattern, const std::string& text) {
  return pattern.match(text);
}

void PatternSet::add(CompiledPattern pattern) {
  auto& list = by_lang_[pattern.spec().lang];
  list.push_back(std::move(pattern));
}

const std::vector<CompiledPattern>& PatternSet::patterns(const std::string& lang) const {
  static const std::vector<CompiledPattern> none;
  auto it = by_lang_.find(lang);
  return it == by_lang_.end() ? none : it->second;
}

std::size_t PatternSet::size() const {
  std::size_t n = 0;
  for (const auto& [lang, list] : by_lang_) n += list.size();
  return n;
}

std::vector<MatchSpan> PatternSet::match(const std::string& lang, const std::string& text) const {
  const auto& list = patterns(lang);
  if (list.empty()) return {};
  auto original = utf8::decode(text);
  auto folded = utf8::fold(original);
  std::vector<MatchSpan> candidates;
  for (const auto& p : list) {
    auto spans = p.match_folded(folded, original);
    candidates.insert(candidates.end(), spans.begin(), spans.end());
  }
  std::sort(candidates.begin(), candidates.end(), [](const MatchSpan& a, const MatchSpan& b) {
    return std::tie(a.start, b.end, a.pattern.source) < std::tie(b.start, a.end, b.pattern.source);
  });
  std::vector<MatchSpan> chosen;
  std::size_t frontier = 0;
  for (auto& span : candidates) {
    if (!chosen.empty() && span.start < frontier) continue;
    frontier = span.end;
    chosen.push_back(std::move(span));
  }
  return chosen;
}

bool PatternSet::any_match(const std::string& lang, const std::string& text) const {
  for (const auto& p : patterns(lang))
    if (!p.match(text).empty()) return true;
  return false;
}

}  // namespace debunk
