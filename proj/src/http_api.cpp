#include "debunk/http_api.hpp"

#include <httplib.h>

#include <charconv>
#include <set>
#include <sstream>

namespace debunk {
namespace {

class BadRequest : public Error {
 public:
  using Error::Error;
};

void reply(httplib::Response& res, int status, const json::Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void reject_unknown(const httplib::Request& req, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : req.params)
    if (!allowed.count(key)) throw BadRequest("unknown query parameter '" + key + "'");
}

std::string required(const httplib::Request& req, const std::string& key) {
  if (!req.has_param(key)) throw BadRequest("missing query parameter '" + key + "'");
  auto v = req.get_param_value(key);
  if (v.empty()) throw BadRequest("empty query parameter '" + key + "'");
  return v;
}

Date date_param(const httplib::Request& req, const std::string& key) {
  try {
    return parse_date(required(req, key));
  } catch (const BadRequest&) {
    throw;
  } catch (const Error& e) {
    throw BadRequest(key + ": " + e.what());
  }
}

// Runs a handler, mapping library errors to HTTP statuses.
template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const BadRequest& e) {
      reply(res, 400, {{"error", e.what()}});
    } catch (const NotFound& e) {
      reply(res, 404, {{"error", e.what()}});
    } catch (const std::exception& e) {
      reply(res, 500, {{"error", e.what()}});
    }
  };
}

}  // namespace

void mount_api(httplib::Server& server, ArchiveService& service, const ApiOptions& options) {
  server.Get("/api/v1/health", guarded([](const httplib::Request& req, httplib::Response& res) {
               reject_unknown(req, {});
               reply(res, 200, {{"status", "ok"}});
             }));

  server.Get("/api/v1/clusters", guarded([&service, options](const httplib::Request& req,
                                                             httplib::Response& res) {
               reject_unknown(req, {"date", "lang", "limit"});
               Date date = date_param(req, "date");
               std::string lang = required(req, "lang");
               std::size_t limit = options.default_limit;
               if (req.has_param("limit")) {
                 auto raw = req.get_param_value("limit");
                 long v = 0;
                 auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
                 if (ec != std::errc{} || ptr != raw.data() + raw.size() || v < 1)
                   throw BadRequest("limit must be a positive integer");
                 limit = static_cast<std::size_t>(v);
               }
               json::Json clusters = json::Json::array();
               for (const auto& v : service.get_top_clusters(date, lang, limit))
                 clusters.push_back(cluster_view_json(v, false));
               reply(res, 200,
                     {{"date", format_date(date)}, {"lang", lang}, {"limit", limit},
                      {"clusters", clusters}});
             }));

  server.Get(R"(/api/v1/clusters/([^/]+))",
             guarded([&service](const httplib::Request& req, httplib::Response& res) {
               reject_unknown(req, {});
               auto v = service.get_cluster(req.matches[1]);
               if (!v) throw NotFound("unknown cluster '" + std::string(req.matches[1]) + "'");
               reply(res, 200, cluster_view_json(*v, true));
             }));

  server.Post(R"(/api/v1/clusters/([^/]+)/votes)",
              guarded([&service](const httplib::Request& req, httplib::Response& res) {
                reject_unknown(req, {});
                json::Json body;
                try {
                  body = json::Json::parse(req.body);
                } catch (const nlohmann::json::parse_error&) {
                  throw BadRequest("body must be a JSON object");
                }
                if (!body.is_object()) throw BadRequest("body must be a JSON object");
                auto voter = body.find("voter_id");
                auto verdict = body.find("verdict");
                if (voter == body.end() || !voter->is_string() || voter->get<std::string>().empty())
                  throw BadRequest("voter_id must be a non-empty string");
                if (verdict == body.end() || !verdict->is_string())
                  throw BadRequest("verdict must be 'fake' or 'not_fake'");
                Vote vote;
                vote.cluster_id = req.matches[1];
                vote.voter_id = voter->get<std::string>();
                try {
                  vote.verdict = verdict_from_string(verdict->get<std::string>());
                } catch (const Error& e) {
                  throw BadRequest(e.what());
                }
                vote.cast_at = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
                Tally t = service.record_vote(vote);
                reply(res, 200,
                      {{"cluster_id", vote.cluster_id},
                       {"tally", json::to_json(t)},
                       {"label", to_string(derive_label(t, service.policy()))}});
              }));

  server.Get("/api/v1/export", guarded([&service](const httplib::Request& req,
                                                  httplib::Response& res) {
               reject_unknown(req, {"from", "to", "lang"});
               Date from = date_param(req, "from");
               Date to = date_param(req, "to");
               std::string lang = required(req, "lang");
               if (std::chrono::sys_days{to} < std::chrono::sys_days{from})
                 throw BadRequest("'from' must not be after 'to'");
               std::ostringstream out;
               service.export_dataset(from, to, lang, out);
               res.status = 200;
               res.set_content(out.str(), "application/x-ndjson");
             }));

  if (!options.static_dir.empty()) server.set_mount_point("/", options.static_dir);
}

}  // namespace debunk
