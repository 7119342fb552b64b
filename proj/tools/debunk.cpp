// Command-line front end: crawl, archive, serve, export, eval-kappa.

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>

#include "debunk/commands.hpp"
#include "debunk/config.hpp"
#include "debunk/http_api.hpp"
#include "debunk/service.hpp"
#include "debunk/store.hpp"

namespace {

using namespace debunk;

std::filesystem::path db_path(const std::string& data_dir) {
  return std::filesystem::path(data_dir) / "archive.sqlite";
}

std::vector<std::string> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(line.substr(line.find_first_not_of(" \t")));
  }
  return out;
}

int run_crawl(Config& cfg, const std::string& source, const std::string& data_dir) {
  ArchiveStore store(db_path(data_dir));
  auto r = crawl_file(cfg, source, store);
  for (const auto& d : r.diagnostics) std::cerr << source << ":" << d.line << ": " << d.message << "\n";
  std::cout << "loaded " << r.loaded << " tweets, stored " << r.stored << " matching a debunking pattern, "
            << r.retweets_collapsed << " retweets collapsed, " << r.diagnostics.size() << " bad records\n";
  return 0;
}

int run_archive(Config& cfg, const std::string& date_s, const std::string& lang,
                const std::string& parses_path, const std::string& embeddings_path,
                const std::string& data_dir) {
  Date date = parse_date(date_s);
  ArchiveStore store(db_path(data_dir));
  auto r = archive_day(cfg, store, date, lang, parses_path, embeddings_path);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  const auto& st = r.stats;
  std::cout << format_date(date) << " " << lang << ": " << st.input_tweets << " tweets, "
            << st.after_share_filter << " after share filter, " << st.matched << " matched, "
            << st.phrases << " phrases, " << st.clusters << " clusters\n";
  return 0;
}

int run_serve(Config& cfg, int port, const std::string& data_dir, const std::string& static_dir,
              const std::string& host) {
  ArchiveStore store(db_path(data_dir));
  ArchiveService service(store, cfg.labels);
  httplib::Server server;
  mount_api(server, service, ApiOptions{cfg.serve.top_limit, static_dir});
  std::cout << "serving " << db_path(data_dir).string() << " on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

int run_export(Config& cfg, const std::string& from, const std::string& to, const std::string& lang,
               const std::string& data_dir, const std::string& out_path) {
  Date f = parse_date(from), t = parse_date(to);
  if (std::chrono::sys_days{t} < std::chrono::sys_days{f}) throw Error("--from must not be after --to");
  ArchiveStore store(db_path(data_dir));
  ArchiveService service(store, cfg.labels);
  if (out_path.empty() || out_path == "-") {
    service.export_dataset(f, t, lang, std::cout);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write '" + out_path + "'");
  auto n = service.export_dataset(f, t, lang, out);
  std::cerr << "exported " << n << " records to " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collects debunked news events from SNS posts and serves them for review."};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Configuration file (defaults are built in)")
      ->check(CLI::ExistingFile);

  std::string data_dir, source, date, lang, tau_s, embeddings, patterns_path, parses, tz;
  std::string from, to, out, static_dir, host = "127.0.0.1", labels_a, labels_b;
  int port = -1;

  auto* crawl = app.add_subcommand("crawl", "Load tweets from a source and store those matching a pattern");
  crawl->add_option("--source", source, "Line-delimited tweet records")->required();
  crawl->add_option("--data-dir", data_dir, "Archive directory");
  crawl->add_option("--patterns", patterns_path, "Pattern file")->check(CLI::ExistingFile);

  auto* archive = app.add_subcommand("archive", "Extract, group and rank one day of stored tweets");
  archive->add_option("--date", date, "Day to archive, YYYY-MM-DD")->required();
  archive->add_option("--lang", lang, "Language code")->required();
  archive->add_option("--tau", tau_s, "WMD grouping threshold");
  archive->add_option("--embeddings", embeddings, "Word vectors for --lang")->check(CLI::ExistingFile);
  archive->add_option("--patterns", patterns_path, "Pattern file")->check(CLI::ExistingFile);
  archive->add_option("--parses", parses, "CoNLL-U sidecar keyed by '# tweet_id'")->check(CLI::ExistingFile);
  archive->add_option("--tz", tz, "Day boundary offset, e.g. +09:00");
  archive->add_option("--data-dir", data_dir, "Archive directory");

  auto* serve = app.add_subcommand("serve", "Serve archived clusters and record votes over HTTP");
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--data-dir", data_dir, "Archive directory");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--static-dir", static_dir, "Directory served at /");

  auto* exp = app.add_subcommand("export", "Write labeled dataset records");
  exp->add_option("--from", from, "First day, YYYY-MM-DD")->required();
  exp->add_option("--to", to, "Last day, YYYY-MM-DD")->required();
  exp->add_option("--lang", lang, "Language code")->required();
  exp->add_option("--data-dir", data_dir, "Archive directory");
  exp->add_option("--out", out, "Output file (stdout when omitted)");

  auto* kappa = app.add_subcommand("eval-kappa", "Cohen's kappa between two label files");
  kappa->add_option("labels_a", labels_a, "One label per line")->required()->check(CLI::ExistingFile);
  kappa->add_option("labels_b", labels_b, "One label per line")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = config_path.empty() ? default_config() : load_config(config_path);
    if (!patterns_path.empty()) apply_pattern_file(cfg, patterns_path);
    if (!tau_s.empty()) {
      double tau = std::stod(tau_s);
      if (!(tau > 0)) throw Error("--tau must be positive");
      cfg.pipeline.grouping.tau = tau;
    }
    if (!tz.empty()) cfg.pipeline.timezone = TzOffset::parse(tz);
    if (data_dir.empty()) data_dir = cfg.serve.data_dir;
    if (port < 0) port = cfg.serve.port;
    if (static_dir.empty()) static_dir = cfg.serve.static_dir;

    if (*crawl) return run_crawl(cfg, source, data_dir);
    if (*archive) return run_archive(cfg, date, lang, parses, embeddings, data_dir);
    if (*serve) return run_serve(cfg, port, data_dir, static_dir, host);
    if (*exp) return run_export(cfg, from, to, lang, data_dir, out);
    if (*kappa) {
      std::cout << cohen_kappa(read_labels(labels_a), read_labels(labels_b)) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
