#pragma once

#include <string>

#include "debunk/service.hpp"

namespace httplib {
class Server;
}

namespace debunk {

struct ApiOptions {
  std::size_t default_limit = 10;
  std::string static_dir;  // served at "/" when non-empty
};

// Registers the /api/v1 routes on `server`:
//   GET  /api/v1/health
//   GET  /api/v1/clusters?date=YYYY-MM-DD&lang=xx&limit=N
//   GET  /api/v1/clusters/{id}
//   POST /api/v1/clusters/{id}/votes   {"voter_id": "...", "verdict": "fake"|"not_fake"}
//   GET  /api/v1/export?from=YYYY-MM-DD&to=YYYY-MM-DD&lang=xx   (application/x-ndjson)
// Unknown query parameters are rejected with 400. Errors carry {"error": "..."}.
void mount_api(httplib::Server& server, ArchiveService& service, const ApiOptions& options = {});

}  // namespace debunk
