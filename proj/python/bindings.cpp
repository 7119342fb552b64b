#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "debunk/archive.hpp"
#include "debunk/commands.hpp"
#include "debunk/json_codec.hpp"
#include "debunk/service.hpp"
#include "debunk/transport.hpp"
#include "debunk/wmd.hpp"

namespace py = pybind11;
using namespace debunk;

namespace {

// JSON values cross as their text and are decoded on the Python side.
std::string dump(const json::Json& j) { return j.dump(); }

EmbeddingTable table_from(const std::map<std::string, std::vector<double>>& vectors) {
  if (vectors.empty()) throw Error("embedding table is empty");
  EmbeddingTable t(vectors.begin()->second.size());
  for (const auto& [w, v] : vectors) t.add(w, v);
  return t;
}

Config config_from(const std::string& path) { return path.empty() ? default_config() : load_config(path); }

class Archive {
 public:
  Archive(const std::string& db_path, const std::string& config_path)
      : cfg_(config_from(config_path)), store_(db_path), service_(store_, cfg_.labels) {}

  py::dict crawl(const std::string& source) {
    auto r = crawl_file(cfg_, source, store_);
    py::list diags;
    for (const auto& d : r.diagnostics) diags.append(py::make_tuple(d.line, d.message));
    py::dict out;
    out["loaded"] = r.loaded;
    out["stored"] = r.stored;
    out["retweets_collapsed"] = r.retweets_collapsed;
    out["diagnostics"] = diags;
    return out;
  }

  py::dict archive(const std::string& date, const std::string& lang, const std::string& parses,
                   const std::string& embeddings, std::optional<double> tau) {
    Config cfg = cfg_;
    if (tau) cfg.pipeline.grouping.tau = *tau;
    auto r = archive_day(cfg, store_, parse_date(date), lang, parses, embeddings);
    py::dict out;
    out["input_tweets"] = r.stats.input_tweets;
    out["after_share_filter"] = r.stats.after_share_filter;
    out["matched"] = r.stats.matched;
    out["phrases"] = r.stats.phrases;
    out["clusters"] = r.stats.clusters;
    out["warnings"] = r.warnings;
    return out;
  }

  std::string top_clusters(const std::string& date, const std::string& lang, std::size_t limit) const {
    json::Json arr = json::Json::array();
    for (const auto& v : service_.get_top_clusters(parse_date(date), lang, limit))
      arr.push_back(cluster_view_json(v, false));
    return dump(arr);
  }

  std::optional<std::string> cluster(const std::string& id) const {
    auto v = service_.get_cluster(id);
    if (!v) return std::nullopt;
    return dump(cluster_view_json(*v, true));
  }

  std::pair<std::uint64_t, std::uint64_t> vote(const std::string& id, const std::string& voter,
                                               const std::string& verdict) {
    Vote v{id, voter, verdict_from_string(verdict),
           std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now())};
    auto t = service_.record_vote(v);
    return {t.fake, t.not_fake};
  }

  std::string export_dataset(const std::string& from, const std::string& to, const std::string& lang) const {
    std::ostringstream out;
    service_.export_dataset(parse_date(from), parse_date(to), lang, out);
    return out.str();
  }

 private:
  Config cfg_;
  ArchiveStore store_;
  ArchiveService service_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the debunking-tweet archive";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("expand_alternations",
        [](const std::string& source, const std::string& lang) { return expand_alternations({lang, source}); },
        py::arg("pattern"), py::arg("lang") = "en");
  m.def(
      "match",
      [](const std::string& source, const std::string& text, const std::string& lang) {
        std::vector<std::tuple<std::size_t, std::size_t, std::string>> out;
        for (const auto& s : match_text(compile_pattern({lang, source}), text))
          out.emplace_back(s.start, s.end, s.matched_text);
        return out;
      },
      py::arg("pattern"), py::arg("text"), py::arg("lang") = "en");
  m.def(
      "wmd",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         const std::map<std::string, std::vector<double>>& vectors) {
        auto t = table_from(vectors);
        return wmd(nbow(a, t), nbow(b, t), t);
      },
      py::arg("tokens_a"), py::arg("tokens_b"), py::arg("vectors"));
  m.def(
      "solve_transport",
      [](const std::vector<double>& supply, const std::vector<double>& demand, const std::vector<double>& cost) {
        auto p = solve_transport(supply, demand, cost);
        return py::make_tuple(p.cost, p.flow);
      },
      py::arg("supply"), py::arg("demand"), py::arg("cost"));
  m.def("cohen_kappa", &cohen_kappa, py::arg("a"), py::arg("b"));
  m.def("default_config_text", &default_config_text);

  py::class_<Archive>(m, "Archive")
      .def(py::init<const std::string&, const std::string&>(), py::arg("db_path"), py::arg("config") = "")
      .def("crawl", &Archive::crawl, py::arg("source"))
      .def("archive", &Archive::archive, py::arg("date"), py::arg("lang"), py::arg("parses") = "",
           py::arg("embeddings") = "", py::arg("tau") = py::none())
      .def("_top_clusters", &Archive::top_clusters, py::arg("date"), py::arg("lang"), py::arg("limit") = 10)
      .def("_cluster", &Archive::cluster, py::arg("cluster_id"))
      .def("vote", &Archive::vote, py::arg("cluster_id"), py::arg("voter_id"), py::arg("verdict"))
      .def("export", &Archive::export_dataset, py::arg("date_from"), py::arg("date_to"), py::arg("lang"));
}
