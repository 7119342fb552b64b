#include "debunk/commands.hpp"

#include <fstream>
#include <sstream>

#include "debunk/service.hpp"

namespace debunk {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CrawlReport crawl_file(const Config& cfg, const std::filesystem::path& source, ArchiveStore& store) {
  auto patterns = cfg.compile_patterns();
  FileTweetSource src(source, cfg.language_codes());
  auto loaded = load_tweets(src);
  std::vector<Tweet> kept;
  for (auto& t : loaded.tweets)
    if (patterns.any_match(t.lang, t.text)) kept.push_back(std::move(t));
  store.put_tweets(kept);
  return {loaded.tweets.size(), kept.size(), loaded.retweets_collapsed, std::move(loaded.diagnostics)};
}

ArchiveReport archive_day(const Config& cfg, ArchiveStore& store, Date date, const std::string& lang,
                          const std::filesystem::path& parses_path,
                          const std::filesystem::path& embeddings_path) {
  ArchiveReport report;
  auto patterns = cfg.compile_patterns();
  auto [from, to] = day_bounds(date, cfg.pipeline.timezone);
  DailyBatch batch{date, lang, store.tweets_between(from, to, lang)};

  std::map<std::string, std::string> texts;
  for (const auto& t : batch.tweets) texts.emplace(t.id, t.text);
  ConlluCorpus parses;
  if (!parses_path.empty()) {
    parses = parse_conllu_corpus(read_file(parses_path), [&](const std::string& id) {
      auto it = texts.find(id);
      return it == texts.end() ? std::nullopt : std::optional<std::string>(it->second);
    });
    for (const auto& d : parses.diagnostics) report.warnings.push_back(parses_path.string() + ": " + d);
  }

  auto emb = embeddings_path;
  if (emb.empty())
    if (auto it = cfg.embeddings.find(lang); it != cfg.embeddings.end()) emb = it->second;
  EmbeddingTable table;
  if (!emb.empty())
    table = load_embeddings(emb);
  else
    report.warnings.push_back("no embeddings for '" + lang + "'; phrase similarity links disabled");

  auto result = archive_batch(batch, parses.documents, patterns, cfg.profile(lang), table, cfg.pipeline);
  ArchiveService(store, cfg.labels).persist_batch(date, lang, result.clusters);
  report.stats = std::move(result.stats);
  return report;
}

void apply_pattern_file(Config& cfg, const std::filesystem::path& path) {
  Config p = load_config(path);
  cfg.patterns = p.patterns;
  for (auto& [lang, profile] : p.languages) cfg.languages[lang] = profile;
}

}  // namespace debunk
