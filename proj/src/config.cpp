#include "debunk/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "debunk/utf8.hpp"

namespace debunk {
namespace {

#include "default_config.inc"

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

std::vector<std::string> list_value(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

bool bool_value(const std::string& v, std::size_t line) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ParseError("expected a boolean, got '" + v + "'", line);
}

template <typename T>
T number_value(const std::string& v, std::size_t line) {
  if constexpr (std::is_floating_point_v<T>) {
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size()) throw ParseError("expected a number, got '" + v + "'", line);
    return static_cast<T>(d);
  } else {
    T out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
      throw ParseError("expected an integer, got '" + v + "'", line);
    return out;
  }
}

}  // namespace

std::set<std::string> Config::language_codes() const {
  std::set<std::string> out;
  for (const auto& [lang, p] : languages) out.insert(lang);
  for (const auto& p : patterns) out.insert(p.lang);
  return out;
}

LanguageProfile Config::profile(const std::string& lang) const {
  auto it = languages.find(lang);
  return it != languages.end() ? it->second : LanguageProfile::defaults_for(lang);
}

PatternSet Config::compile_patterns() const {
  PatternSet set;
  for (const auto& spec : patterns) set.add(compile_pattern(spec, profile(spec.lang).word_boundaries));
  return set;
}

Config parse_config(std::string_view text) {
  Config cfg;
  std::string kind, arg;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", lineno);
      auto inner = trim(std::string_view(line).substr(1, line.size() - 2));
      auto space = inner.find(' ');
      kind = inner.substr(0, space);
      arg = space == std::string::npos ? "" : trim(std::string_view(inner).substr(space + 1));
      if (kind == "language" || kind == "patterns") {
        if (arg.empty()) throw ParseError("section '" + kind + "' needs a language code", lineno);
        if (kind == "language" && !cfg.languages.count(arg))
          cfg.languages.emplace(arg, LanguageProfile::defaults_for(arg));
      } else if (kind != "pipeline" && kind != "labels" && kind != "serve") {
        throw ParseError("unknown section '" + inner + "'", lineno);
      }
      continue;
    }
    if (kind.empty()) throw ParseError("entry outside any section", lineno);
    if (kind == "patterns") {
      cfg.patterns.push_back(PatternSpec{arg, line});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
    auto key = trim(std::string_view(line).substr(0, eq));
    auto value = unquote(trim(std::string_view(line).substr(eq + 1)));
    auto unknown = [&] { return ParseError("unknown key '" + key + "' in [" + kind + "]", lineno); };

    if (kind == "pipeline") {
      if (key == "min_shares_exclusive")
        cfg.pipeline.min_shares_exclusive = number_value<std::uint64_t>(value, lineno);
      else if (key == "timezone") {
        try {
          cfg.pipeline.timezone = TzOffset::parse(value);
        } catch (const Error& e) {
          throw ParseError(e.what(), lineno);
        }
      } else if (key == "tau") {
        cfg.pipeline.grouping.tau = number_value<double>(value, lineno);
        if (!(cfg.pipeline.grouping.tau > 0)) throw ParseError("tau must be positive", lineno);
      } else if (key == "centroid_prefilter")
        cfg.pipeline.grouping.centroid_prefilter = bool_value(value, lineno);
      else if (key == "max_pairs") {
        auto cap = number_value<std::size_t>(value, lineno);
        cfg.pipeline.grouping.max_pairs = cap == 0 ? std::nullopt : std::optional(cap);
      } else if (key == "threads")
        cfg.pipeline.grouping.threads = std::max(1u, number_value<unsigned>(value, lineno));
      else
        throw unknown();
    } else if (kind == "labels") {
      if (key == "min_votes")
        cfg.labels.min_votes = number_value<std::uint64_t>(value, lineno);
      else if (key == "min_majority") {
        cfg.labels.min_majority = number_value<double>(value, lineno);
        if (!(cfg.labels.min_majority >= 0.5 && cfg.labels.min_majority <= 1))
          throw ParseError("min_majority must be within [0.5, 1]", lineno);
      } else
        throw unknown();
    } else if (kind == "serve") {
      if (key == "port")
        cfg.serve.port = number_value<int>(value, lineno);
      else if (key == "data_dir")
        cfg.serve.data_dir = value;
      else if (key == "top_limit")
        cfg.serve.top_limit = number_value<std::size_t>(value, lineno);
      else if (key == "static_dir")
        cfg.serve.static_dir = value;
      else
        throw unknown();
    } else {  // language
      auto& p = cfg.languages[arg];
      if (key == "word_boundaries")
        p.word_boundaries = bool_value(value, lineno);
      else if (key == "hop") {
        if (value == "following")
          p.hop = HopDirection::Following;
        else if (value == "preceding")
          p.hop = HopDirection::Preceding;
        else
          throw ParseError("hop must be 'following' or 'preceding'", lineno);
      } else if (key == "separator")
        p.token_separator = value;
      else if (key == "demonstratives") {
        p.demonstratives.clear();
        for (const auto& w : list_value(value)) p.demonstratives.insert(utf8::fold_utf8(w));
      } else if (key == "relations") {
        auto rels = list_value(value);
        p.relations = std::set<std::string>(rels.begin(), rels.end());
      } else if (key == "embeddings")
        cfg.embeddings[arg] = value;
      else
        throw unknown();
    }
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

const std::string& default_config_text() {
  static const std::string text = kDefaultConfig;
  return text;
}

Config default_config() { return parse_config(default_config_text()); }

}  // namespace debunk
