#include "debunk/conllu.hpp"

#include <charconv>
#include <sstream>

#include "debunk/utf8.hpp"

namespace debunk {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::optional<long> to_int(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Value of `key` in a CoNLL-U MISC column.
std::optional<std::string_view> misc_value(std::string_view misc, std::string_view key) {
  if (misc == "_") return std::nullopt;
  for (auto item : split(misc, '|')) {
    auto eq = item.find('=');
    if (eq != std::string_view::npos && item.substr(0, eq) == key) return item.substr(eq + 1);
  }
  return std::nullopt;
}

struct Offsets {
  std::size_t start;
  std::size_t end;
};

std::optional<Offsets> misc_offsets(std::string_view misc) {
  if (auto range = misc_value(misc, "TokenRange")) {
    auto colon = range->find(':');
    if (colon != std::string_view::npos) {
      auto s = to_int(range->substr(0, colon));
      auto e = to_int(range->substr(colon + 1));
      if (s && e && *s >= 0 && *e > *s)
        return Offsets{static_cast<std::size_t>(*s), static_cast<std::size_t>(*e)};
    }
  }
  auto s = misc_value(misc, "start_char");
  auto e = misc_value(misc, "end_char");
  if (s && e) {
    auto si = to_int(*s);
    auto ei = to_int(*e);
    if (si && ei && *si >= 0 && *ei > *si)
      return Offsets{static_cast<std::size_t>(*si), static_cast<std::size_t>(*ei)};
  }
  return std::nullopt;
}

// A unit of surface text to align: either one word or one multiword token
// whose range every component word inherits.
struct SurfaceUnit {
  std::string form;
  std::optional<Offsets> offsets;
  bool space_after = true;
  std::vector<std::size_t> tokens;  // positions in the flat token list
  std::size_t line = 0;
  std::size_t sentence = 0;
};

struct SentenceLines {
  std::size_t first_line = 0;
  std::vector<std::size_t> token_lines;
};

void check_sentence(const Sentence& s, std::size_t sentence_no, const SentenceLines& lines,
                    std::vector<TreeDiagnostic>* diags, bool throw_first) {
  auto report = [&](const std::string& msg, std::size_t token_pos) {
    if (throw_first) {
      std::size_t line = token_pos < lines.token_lines.size() ? lines.token_lines[token_pos]
                                                              : lines.first_line;
      throw ConlluError(msg, sentence_no, line);
    }
    diags->push_back({sentence_no, msg});
  };
  const int n = static_cast<int>(s.tokens.size());
  std::vector<std::size_t> roots;
  bool heads_ok = true;
  for (int i = 0; i < n; ++i) {
    const auto& t = s.tokens[static_cast<std::size_t>(i)];
    if (t.index != i + 1) {
      report("token index " + std::to_string(t.index) + " out of sequence (expected " +
                 std::to_string(i + 1) + ")",
             static_cast<std::size_t>(i));
      heads_ok = false;
    }
    if (t.head < 0 || t.head > n) {
      report("head " + std::to_string(t.head) + " of token " + std::to_string(t.index) +
                 " out of range 0.." + std::to_string(n),
             static_cast<std::size_t>(i));
      heads_ok = false;
    } else if (t.head == t.index) {
      report("token " + std::to_string(t.index) + " is its own head", static_cast<std::size_t>(i));
      heads_ok = false;
    }
    if (t.head == 0) roots.push_back(static_cast<std::size_t>(i));
    if (t.char_start >= t.char_end)
      report("token " + std::to_string(t.index) + " has an empty character range",
             static_cast<std::size_t>(i));
  }
  if (n == 0) return;
  if (roots.empty()) report("no root token", 0);
  if (roots.size() > 1) report(std::to_string(roots.size()) + " root tokens", roots[1]);
  if (!heads_ok) return;

  // 0 = unvisited, 1 = on the current path, 2 = done.
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur != 0 && state[static_cast<std::size_t>(cur)] == 0) {
      state[static_cast<std::size_t>(cur)] = 1;
      path.push_back(cur);
      cur = s.tokens[static_cast<std::size_t>(cur - 1)].head;
    }
    if (cur != 0 && state[static_cast<std::size_t>(cur)] == 1) {
      std::string cycle;
      int c = cur;
      do {
        cycle += std::to_string(c) + "->";
        c = s.tokens[static_cast<std::size_t>(c - 1)].head;
      } while (c != cur);
      report("head cycle " + cycle + std::to_string(cur), static_cast<std::size_t>(cur - 1));
    }
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }
}

DependencyDocument parse_block(std::string_view text, const std::string& tweet_id,
                               const std::optional<std::string>& raw_text,
                               std::size_t line_offset) {
  DependencyDocument doc;
  doc.tweet_id = tweet_id;
  std::vector<SentenceLines> sentence_lines;
  std::vector<SurfaceUnit> units;

  Sentence current;
  SentenceLines current_lines;
  bool in_sentence = false;
  // Active multiword range [first, last] and its unit slot.
  long mwt_last = 0;
  std::size_t mwt_unit = 0;
  std::vector<std::pair<std::size_t, std::size_t>> token_refs;  // (sentence, position)

  auto finish_sentence = [&] {
    if (in_sentence) {
      doc.sentences.push_back(std::move(current));
      sentence_lines.push_back(std::move(current_lines));
    }
    current = Sentence{};
    current_lines = SentenceLines{};
    in_sentence = false;
    mwt_last = 0;
  };

  std::size_t lineno = line_offset;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw_line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      finish_sentence();
      continue;
    }
    const std::size_t sentence_no = doc.sentences.size() + 1;
    if (!in_sentence) {
      in_sentence = true;
      current_lines.first_line = lineno;
    }
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.substr(0, 4) == "text") {
        auto eq = body.find('=');
        if (eq != std::string_view::npos && trim(body.substr(4, eq - 4)).empty())
          current.text = std::string(trim(body.substr(eq + 1)));
      }
      continue;
    }
    auto cols = split(line, '\t');
    if (cols.size() != 10)
      throw ConlluError("expected 10 tab-separated columns, found " + std::to_string(cols.size()),
                        sentence_no, lineno);
    std::string_view id = cols[0];
    if (id.find('.') != std::string_view::npos) continue;  // empty node
    if (auto dash = id.find('-'); dash != std::string_view::npos) {
      auto first = to_int(id.substr(0, dash));
      auto last = to_int(id.substr(dash + 1));
      if (!first || !last || *last < *first)
        throw ConlluError("bad multiword range '" + std::string(id) + "'", sentence_no, lineno);
      mwt_last = *last;
      SurfaceUnit unit;
      unit.form = std::string(cols[1]);
      unit.offsets = misc_offsets(cols[9]);
      unit.space_after = misc_value(cols[9], "SpaceAfter") != std::string_view("No");
      unit.line = lineno;
      unit.sentence = sentence_no;
      mwt_unit = units.size();
      units.push_back(std::move(unit));
      continue;
    }
    auto index = to_int(id);
    if (!index) throw ConlluError("non-integer token id '" + std::string(id) + "'", sentence_no, lineno);
    auto head = to_int(cols[6]);
    if (!head)
      throw ConlluError("non-integer head '" + std::string(cols[6]) + "'", sentence_no, lineno);
    UdToken tok;
    tok.index = static_cast<int>(*index);
    tok.form = std::string(cols[1]);
    tok.lemma = std::string(cols[2]);
    tok.upos = std::string(cols[3]);
    tok.head = static_cast<int>(*head);
    tok.deprel = std::string(cols[7]);
    if (tok.form.empty())
      throw ConlluError("empty form", sentence_no, lineno);

    const std::size_t flat_pos = token_refs.size();
    token_refs.emplace_back(doc.sentences.size(), current.tokens.size());
    current_lines.token_lines.push_back(lineno);
    if (mwt_last != 0 && *index <= mwt_last) {
      units[mwt_unit].tokens.push_back(flat_pos);
      if (*index == mwt_last) mwt_last = 0;
    } else {
      mwt_last = 0;
      SurfaceUnit unit;
      unit.form = tok.form;
      unit.offsets = misc_offsets(cols[9]);
      unit.space_after = misc_value(cols[9], "SpaceAfter") != std::string_view("No");
      unit.line = lineno;
      unit.sentence = sentence_no;
      unit.tokens.push_back(flat_pos);
      units.push_back(std::move(unit));
    }
    current.tokens.push_back(std::move(tok));
  }
  finish_sentence();

  auto token_at = [&](std::size_t flat_pos) -> UdToken& {
    auto [s, p] = token_refs[flat_pos];
    return doc.sentences[s].tokens[p];
  };

  bool all_explicit = !units.empty();
  for (const auto& u : units) all_explicit = all_explicit && u.offsets.has_value();

  if (all_explicit) {
    for (const auto& u : units)
      for (auto fp : u.tokens) {
        token_at(fp).char_start = u.offsets->start;
        token_at(fp).char_end = u.offsets->end;
      }
  } else if (!units.empty()) {
    std::u32string target;
    if (raw_text) {
      target = utf8::decode(*raw_text);
    } else {
      std::size_t last_sentence = units.front().sentence;
      for (std::size_t i = 0; i < units.size(); ++i) {
        if (i > 0 && (units[i - 1].space_after || units[i].sentence != last_sentence))
          target.push_back(U' ');
        last_sentence = units[i].sentence;
        target += utf8::decode(units[i].form);
      }
    }
    std::size_t cursor = 0;
    for (const auto& u : units) {
      auto form = utf8::decode(u.form);
      while (cursor < target.size() && utf8::is_space(target[cursor])) ++cursor;
      if (target.compare(cursor, form.size(), form) != 0)
        throw ConlluError("cannot align form '" + u.form + "' at text offset " +
                              std::to_string(cursor),
                          u.sentence, u.line);
      for (auto fp : u.tokens) {
        token_at(fp).char_start = cursor;
        token_at(fp).char_end = cursor + form.size();
      }
      cursor += form.size();
    }
  }

  for (std::size_t i = 0; i < doc.sentences.size(); ++i)
    check_sentence(doc.sentences[i], i + 1, sentence_lines[i], nullptr, true);
  return doc;
}

}  // namespace

std::size_t DependencyDocument::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

DependencyDocument parse_conllu(std::string_view text, const std::string& tweet_id,
                                const std::optional<std::string>& raw_text) {
  return parse_block(text, tweet_id, raw_text, 0);
}

std::vector<TreeDiagnostic> validate_tree(const DependencyDocument& doc) {
  std::vector<TreeDiagnostic> diags;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i)
    check_sentence(doc.sentences[i], i + 1, SentenceLines{}, &diags, false);
  return diags;
}

std::string serialize_conllu(const DependencyDocument& doc) {
  std::ostringstream out;
  out << "# tweet_id = " << doc.tweet_id << '\n';
  for (const auto& s : doc.sentences) {
    if (!s.text.empty()) out << "# text = " << s.text << '\n';
    for (const auto& t : s.tokens) {
      out << t.index << '\t' << t.form << '\t' << (t.lemma.empty() ? "_" : t.lemma) << '\t'
          << (t.upos.empty() ? "_" : t.upos) << "\t_\t_\t" << t.head << '\t' << t.deprel
          << "\t_\tTokenRange=" << t.char_start << ':' << t.char_end << '\n';
    }
    out << '\n';
  }
  return out.str();
}

ConlluCorpus parse_conllu_corpus(
    std::string_view text,
    const std::function<std::optional<std::string>(const std::string&)>& raw_text) {
  ConlluCorpus corpus;
  std::string id;
  std::size_t block_start = 0;      // byte offset
  std::size_t block_first_line = 0;  // lines before the block
  bool have_block = false;

  auto flush = [&](std::size_t end) {
    if (!have_block) return;
    auto block = text.substr(block_start, end - block_start);
    try {
      auto raw = raw_text ? raw_text(id) : std::nullopt;
      auto doc = parse_block(block, id, raw, block_first_line);
      if (!corpus.documents.emplace(id, std::move(doc)).second)
        corpus.diagnostics.push_back("tweet " + id + ": duplicate parse block ignored");
    } catch (const Error& e) {
      corpus.diagnostics.push_back("tweet " + id + ": " + e.what());
    }
  };

  std::size_t pos = 0;
  std::size_t lineno = 0;
  bool orphan_reported = false;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::size_t next = nl == std::string_view::npos ? text.size() : nl + 1;
    auto line = trim(text.substr(pos, end - pos));
    ++lineno;
    if (!line.empty() && line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.substr(0, 8) == "tweet_id") {
        auto eq = body.find('=');
        if (eq != std::string_view::npos && trim(body.substr(8, eq - 8)).empty()) {
          flush(pos);
          id = std::string(trim(body.substr(eq + 1)));
          block_start = next;
          block_first_line = lineno;
          have_block = true;
        }
      }
    } else if (!have_block && !line.empty() && !orphan_reported) {
      corpus.diagnostics.push_back("line " + std::to_string(lineno) +
                                   ": tokens before any '# tweet_id' comment ignored");
      orphan_reported = true;
    }
    pos = next;
  }
  flush(text.size());
  return corpus;
}

}  // namespace debunk
