#include <gtest/gtest.h>

#include <random>

#include "debunk/error.hpp"
#include "debunk/config.hpp"
#include "debunk/pattern.hpp"
#include "debunk/utf8.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace debunk;

namespace {

PatternSpec en(std::string s) { return {"en", std::move(s)}; }
PatternSpec ja(std::string s) { return {"ja", std::move(s)}; }

std::vector<std::string> spans(const std::vector<MatchSpan>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(std::to_string(m.start) + "-" + std::to_string(m.end) + ":" + m.matched_text);
  return out;
}

}  // namespace

TEST(Pattern, ExpandsTable1Forms) {
  EXPECT_EQ(expand_alternations(en("(isn't|is not) true")),
            (std::vector<std::string>{"isn't true", "is not true"}));
  auto four = expand_alternations(en("is (completely) (false|fake)"));
  EXPECT_EQ(std::set<std::string>(four.begin(), four.end()),
            (std::set<std::string>{"is false", "is fake", "is completely false", "is completely fake"}));
  EXPECT_EQ(four.size(), 4u);
  EXPECT_EQ(expand_alternations(en("#fakenews")), std::vector<std::string>{"#fakenews"});
  EXPECT_EQ(expand_alternations(ja("というデマ")), std::vector<std::string>{"というデマ"});
  EXPECT_EQ(expand_alternations(ja("(信じ|拡散し)ない")),
            (std::vector<std::string>{"信じない", "拡散しない"}));
}

TEST(Pattern, CartesianOptionalAndDedup) {
  EXPECT_EQ(expand_alternations(en("(a|b) (c|d)")).size(), 4u);
  EXPECT_EQ(expand_alternations(en("(x) y")), (std::vector<std::string>{"y", "x y"}));
  EXPECT_EQ(expand_alternations(en("(a|a) b")), std::vector<std::string>{"a b"});
  EXPECT_EQ(expand_alternations(en("a ((b|c) d)")),
            (std::vector<std::string>{"a", "a b d", "a c d"}));
  EXPECT_EQ(expand_alternations(en("a \\(b\\)")), std::vector<std::string>{"a (b)"});
}

TEST(Pattern, SyntaxErrorsNameTheOffset) {
  auto offset_of = [](const std::string& src) -> long {
    try {
      expand_alternations(en(src));
    } catch (const PatternSyntaxError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("is (fake"), 3);
  EXPECT_EQ(offset_of("is fake)"), 7);
  EXPECT_EQ(offset_of("is (a||b)"), 6);
  EXPECT_EQ(offset_of("is (|b)"), 4);
  EXPECT_EQ(offset_of("a|b"), 1);
  EXPECT_EQ(offset_of("trailing\\"), 8);
  EXPECT_THROW(expand_alternations(en("")), PatternSyntaxError);
  EXPECT_THROW(expand_alternations(en("(x)")), PatternSyntaxError);
  EXPECT_THROW(compile_pattern(en("((a)")), PatternSyntaxError);
}

TEST(Pattern, MatchesMichaelTalking) {
  auto p = compile_pattern(en("is (false|fake)"));
  auto m = match_text(p, "Michael talking is fake!");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].start, 16u);
  EXPECT_EQ(m[0].end, 23u);
  EXPECT_EQ(m[0].matched_text, "is fake");
  EXPECT_EQ(m[0].pattern, en("is (false|fake)"));
}

TEST(Pattern, EmptyTextAndWordBoundaries) {
  EXPECT_TRUE(match_text(compile_pattern(en("is not true")), "").empty());
  EXPECT_TRUE(match_text(compile_pattern(en("is not true")), "this is notorious").empty());
  EXPECT_TRUE(match_text(compile_pattern(en("is fake")), "this is fakery").empty());
  EXPECT_TRUE(match_text(compile_pattern(en("is fake")), "thisis fake").empty());
  EXPECT_EQ(match_text(compile_pattern(en("is fake")), "(is fake)").size(), 1u);
  EXPECT_EQ(match_text(compile_pattern(en("#fakenews")), "lol#fakenews").size(), 1u);
}

TEST(Pattern, CaseWhitespaceAndApostrophes) {
  auto p = compile_pattern(en("(isn't|is not) true"));
  EXPECT_EQ(spans(match_text(p, "That IS   NOT\ttrue.")), std::vector<std::string>{"5-18:IS   NOT\ttrue"});
  EXPECT_EQ(match_text(p, "it isn’t true").size(), 1u);
  auto q = compile_pattern(en("Don’t believe everything"));
  EXPECT_EQ(match_text(q, "don't believe everything").size(), 1u);
}

TEST(Pattern, JapaneseIsSubstringAndExact) {
  auto p = compile_pattern(ja("は(デマ|フェイク)"));
  EXPECT_FALSE(p.word_boundaries());
  EXPECT_EQ(spans(match_text(p, "地震予知はデマです")), std::vector<std::string>{"4-7:はデマ"});
  EXPECT_TRUE(match_text(p, "地震予知はﾃﾞﾏです").empty());
}

TEST(Pattern, LeftmostLongestNonOverlapping) {
  auto p = compile_pattern(en("is (completely) (false|fake)"));
  EXPECT_EQ(spans(match_text(p, "it is completely fake, is false")),
            (std::vector<std::string>{"3-21:is completely fake", "23-31:is false"}));
  auto q = compile_pattern(ja("(デマ|デマデマ)"));
  EXPECT_EQ(spans(match_text(q, "デマデマデマ")), (std::vector<std::string>{"0-4:デマデマ", "4-6:デマ"}));
}

TEST(Pattern, SetResolvesOverlapsIndependentOfOrder) {
  std::vector<PatternSpec> specs{ja("は(デマ|フェイク)"), ja("(デマ|フェイク|フェイクニュース)です"),
                                 ja("というデマ"), en("is fake")};
  PatternSet forward, backward;
  for (const auto& s : specs) forward.add(compile_pattern(s));
  for (auto it = specs.rbegin(); it != specs.rend(); ++it) backward.add(compile_pattern(*it));
  for (std::string text : {"地震予知はデマです", "大谷選手の引退はフェイクニュースです", "デマです、というデマ"}) {
    EXPECT_EQ(forward.match("ja", text), backward.match("ja", text)) << text;
  }
  auto m = forward.match("ja", "地震予知はデマです");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].matched_text, "はデマ");
  EXPECT_TRUE(forward.match("fr", "is fake").empty());
  EXPECT_TRUE(forward.any_match("en", "It is fake"));
  EXPECT_FALSE(forward.any_match("ja", "It is fake"));
  EXPECT_EQ(forward.size(), 4u);
}

// Random specs from a generator that keeps its own parse tree; the tree's
// expansion is the reference.
TEST(PatternProperty, RandomSpecsMatchTheirExpansion) {
  std::mt19937_64 rng(7);
  const std::u32string alphabet = U"abAB ";
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    auto node = oracle::random_pattern(rng, 2, alphabet);
    PatternSpec spec{"en", oracle::render(node)};
    auto expected = oracle::expand(node);
    std::set<std::u32string> folded;
    for (const auto& s : expected) folded.insert(oracle::ascii_lower(s));
    if (expected.count(U"")) {
      EXPECT_THROW(compile_pattern(spec), PatternSyntaxError) << spec.source;
      continue;
    }
    auto got = expand_alternations(spec);
    std::set<std::u32string> got_set;
    for (const auto& g : got) got_set.insert(utf8::decode(g));
    ASSERT_EQ(got_set, expected) << spec.source;
    ASSERT_EQ(got.size(), got_set.size()) << spec.source;

    auto compiled = compile_pattern(spec);
    std::vector<std::u32string> probes(expected.begin(), expected.end());
    std::uniform_int_distribution<std::size_t> len(1, 8), ch(0, alphabet.size() - 1);
    for (int k = 0; k < 20; ++k) {
      std::u32string s;
      for (auto l = len(rng); l > 0; --l) s += alphabet[ch(rng)];
      probes.push_back(s);
    }
    for (const auto& probe : probes) {
      std::u32string trimmed = oracle::collapse_spaces(probe);
      if (trimmed != probe || trimmed.empty()) continue;
      bool member = folded.count(oracle::ascii_lower(trimmed)) > 0;
      auto ms = compiled.match(utf8::encode(probe));
      bool full = !ms.empty() && ms[0].start == 0 && ms[0].end == probe.size();
      ASSERT_EQ(full, member) << spec.source << " on '" << utf8::encode(probe) << "'";
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Pattern, ShippedPatternsProbe) {
  auto cfg = default_config();
  ASSERT_EQ(cfg.patterns.size(), 10u);
  auto probes = fixtures::shipped_pattern_probes();
  for (const auto& spec : cfg.patterns) {
    auto it = probes.find(spec.source);
    ASSERT_NE(it, probes.end()) << spec.source;
    auto p = compile_pattern(spec);
    EXPECT_FALSE(match_text(p, it->second.first).empty()) << spec.source;
    EXPECT_TRUE(match_text(p, it->second.second).empty()) << spec.source;
  }
}
