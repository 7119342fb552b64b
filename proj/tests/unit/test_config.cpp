#include <gtest/gtest.h>

#include "debunk/error.hpp"
#include "debunk/config.hpp"

using namespace debunk;

TEST(Config, DefaultsMatchShippedFile) {
  auto cfg = default_config();
  EXPECT_EQ(cfg.pipeline.min_shares_exclusive, 3u);
  EXPECT_DOUBLE_EQ(cfg.pipeline.grouping.tau, 0.25);
  EXPECT_EQ(cfg.labels.min_votes, 5u);
  EXPECT_DOUBLE_EQ(cfg.labels.min_majority, 0.6);
  EXPECT_EQ(cfg.serve.top_limit, 10u);
  EXPECT_EQ(cfg.language_codes(), (std::set<std::string>{"en", "ja"}));
  auto ja = cfg.profile("ja");
  EXPECT_FALSE(ja.word_boundaries);
  EXPECT_EQ(ja.hop, HopDirection::Preceding);
  EXPECT_EQ(ja.token_separator, "");
  EXPECT_TRUE(ja.demonstratives.count("これ"));
  auto en = cfg.profile("en");
  EXPECT_EQ(en.token_separator, " ");
  EXPECT_EQ(en.demonstratives, (std::set<std::string>{"this", "that", "it", "these", "those"}));
  EXPECT_EQ(en.relations, (std::set<std::string>{"nsubj", "nsubjpass", "dobj", "iobj", "csubj", "appos"}));
  EXPECT_EQ(cfg.compile_patterns().size(), 10u);
}

TEST(Config, NewLanguageNeedsOnlyConfiguration) {
  auto cfg = parse_config(R"(
[language de]
hop = following
demonstratives = das, dies

[patterns de]
ist (falsch|fake)
)");
  auto set = cfg.compile_patterns();
  EXPECT_TRUE(set.any_match("de", "Das Video ist FALSCH"));
  EXPECT_TRUE(cfg.profile("de").demonstratives.count("das"));
  EXPECT_TRUE(cfg.profile("de").word_boundaries);
  EXPECT_EQ(cfg.profile("ko").lang, "ko");
}

TEST(Config, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> long {
    try {
      parse_config(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.line());
    }
    return -1;
  };
  EXPECT_EQ(line_of("[pipeline]\ntau = 0.3\nbogus = 1\n"), 3);
  EXPECT_EQ(line_of("[nowhere]\n"), 1);
  EXPECT_EQ(line_of("[pipeline]\ntau = abc\n"), 2);
  EXPECT_EQ(line_of("[pipeline]\ntau = -1\n"), 2);
  EXPECT_EQ(line_of("[labels]\nmin_majority = 1.5\n"), 2);
  EXPECT_EQ(line_of("key = 1\n"), 1);
  EXPECT_EQ(line_of("[language en]\nhop = sideways\n"), 2);
}

TEST(Config, OverridesAndQuotedValues) {
  auto cfg = parse_config("[pipeline]\ntau = 0.5\ntimezone = +09:00\nmax_pairs = 100\n[language xx]\nseparator = \" \"\n");
  EXPECT_DOUBLE_EQ(cfg.pipeline.grouping.tau, 0.5);
  EXPECT_EQ(cfg.pipeline.timezone.to_string(), "+09:00");
  ASSERT_TRUE(cfg.pipeline.grouping.max_pairs.has_value());
  EXPECT_EQ(*cfg.pipeline.grouping.max_pairs, 100u);
  EXPECT_EQ(cfg.profile("xx").token_separator, " ");
}
