#include "fixtures.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "debunk/extractor.hpp"

namespace fixtures {

std::string dir() { return DEBUNK_FIXTURE_DIR; }

std::string read(const std::string& name) {
  std::ifstream in(dir() + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ExtractionCase> extraction_cases() {
  std::string text = read("extraction_cases.conllu");
  std::map<std::string, ExtractionCase> meta;
  std::vector<std::string> order;
  std::istringstream in(text);
  std::string line, current;
  auto value = [](const std::string& l, const std::string& key) -> std::optional<std::string> {
    std::string prefix = "# " + key + " = ";
    if (l.rfind(prefix, 0) != 0) return std::nullopt;
    return l.substr(prefix.size());
  };
  while (std::getline(in, line)) {
    if (auto v = value(line, "tweet_id")) {
      current = *v;
      meta[current].id = current;
      order.push_back(current);
    } else if (auto v = value(line, "lang")) {
      meta[current].lang = *v;
    } else if (auto v = value(line, "tweet_text")) {
      meta[current].text = *v;
    } else if (auto v = value(line, "expected")) {
      if (*v != "<none>") meta[current].expected = *v;
    }
  }
  auto corpus = debunk::parse_conllu_corpus(text, [&](const std::string& id) -> std::optional<std::string> {
    auto it = meta.find(id);
    if (it == meta.end()) return std::nullopt;
    return it->second.text;
  });
  if (!corpus.diagnostics.empty()) throw std::runtime_error("fixture: " + corpus.diagnostics.front());
  std::vector<ExtractionCase> out;
  for (const auto& id : order) {
    auto c = meta.at(id);
    c.doc = corpus.documents.at(id);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::string> run_extraction(const ExtractionCase& c, const debunk::Config& cfg,
                                          const debunk::PatternSet& patterns) {
  auto spans = patterns.match(c.lang, c.text);
  auto phrase = debunk::extract_from_matches(c.doc, spans, cfg.profile(c.lang));
  if (!phrase) return std::nullopt;
  return phrase->text;
}

std::map<std::string, std::pair<std::string, std::string>> shipped_pattern_probes() {
  return {
    {"(isn't|is not) true", {"The moon base story is not true", "it is nottrue"}},
    {"is (completely) (false|fake)", {"this is completely fake!!", "it is fakery"}},
    {"Don’t believe everything", {"don't believe everything you read", "Do not believe everything"}},
    {"spreading (false|fake)", {"stop spreading fake news", "spreading falsehoods"}},
    {"#fakenews", {"pope endorses trump #FakeNews", "#fake news"}},
    {"は(デマ|フェイク)", {"地震予知はデマです", "地震予知がデマです"}},
    {"(デマ|フェイク|フェイクニュース)です", {"それはフェイクニュースです", "デマでした"}},
    {"(フェイク|間違い|デマ)である", {"その報道は間違いである", "間違いでない"}},
    {"というデマ", {"不妊になるというデマ", "というデータ"}},
    {"(信じ|拡散し)ない", {"予言を信じないで", "予言を信じる"}},
  };
}

EndToEnd load_end_to_end() {
  EndToEnd e;
  std::istringstream in(read("e2e/tweets.jsonl"));
  auto loaded = debunk::read_tweets(in, debunk::default_languages());
  if (!loaded.diagnostics.empty()) throw std::runtime_error("e2e tweets: " + loaded.diagnostics.front().message);
  e.tweets = std::move(loaded.tweets);
  e.expected = debunk::json::Json::parse(read("e2e/expected.json"));
  e.day.date = debunk::parse_date(e.expected.at("date").get<std::string>());
  e.day.lang = "en";
  auto [from, to] = debunk::day_bounds(e.day.date, {});
  std::map<std::string, std::string> text;
  for (const auto& t : e.tweets) {
    text[t.id] = t.text;
    if (t.lang == "en" && t.created_at >= from && t.created_at < to) e.day.tweets.push_back(t);
  }
  auto corpus = debunk::parse_conllu_corpus(read("e2e/parses.conllu"), [&](const std::string& id) -> std::optional<std::string> {
    auto it = text.find(id);
    if (it == text.end()) return std::nullopt;
    return it->second;
  });
  if (!corpus.diagnostics.empty()) throw std::runtime_error("e2e parses: " + corpus.diagnostics.front());
  e.parses = std::move(corpus.documents);
  std::istringstream emb(read("e2e/embeddings.txt"));
  e.table = debunk::read_embeddings(emb);
  return e;
}

debunk::ArchiveResult run_end_to_end(const EndToEnd& e, const debunk::Config& cfg) {
  return debunk::archive_batch(e.day, e.parses, cfg.compile_patterns(), cfg.profile("en"), e.table, cfg.pipeline);
}

}  // namespace fixtures
