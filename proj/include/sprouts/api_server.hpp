#pragma once

#include <string>

#include "sprouts/session.hpp"

namespace httplib {
class Server;
}

namespace sprouts::api {

// Routes:
//   POST /sessions                    create a session
//   GET  /sessions/{id}               session state
//   GET  /sessions/{id}/moves         legal moves (?hints=true adds nimbers)
//   POST /sessions/{id}/moves         play a move
//   POST /sessions/{id}/engine-move   let the engine move
//   GET  /analyze?state=...           analyse a position
void register_routes(httplib::Server& server, SessionManager& sessions);

// Blocks until the server is stopped. Returns false if binding fails.
bool serve(const std::string& host, int port, GrundyTable& table);

}  // namespace sprouts::api
