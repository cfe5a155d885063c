#include "sprouts/api_server.hpp"

#include "httplib.h"

namespace sprouts::api {

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename Fn>
void guarded(httplib::Response& res, int ok_status, Fn&& fn) {
  try {
    send_json(res, ok_status, fn());
  } catch (const ApiError& e) {
    send_json(res, e.status(), e.body());
  } catch (const json::exception& e) {
    send_json(res, 400, {{"error", std::string("invalid JSON: ") + e.what()}});
  } catch (const std::exception& e) {
    send_json(res, 500, {{"error", e.what()}});
  }
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  return json::parse(req.body);
}

}  // namespace

void register_routes(httplib::Server& server, SessionManager& sessions) {
  server.Post("/sessions", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, 201, [&] { return sessions.create(parse_body(req)); });
  });
  server.Get(R"(/sessions/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, 200, [&] { return sessions.get(req.matches[1]); });
  });
  server.Get(R"(/sessions/([^/]+)/moves)",
             [&](const httplib::Request& req, httplib::Response& res) {
               const bool hints = req.has_param("hints") && req.get_param_value("hints") == "true";
               guarded(res, 200, [&] { return sessions.moves(req.matches[1], hints); });
             });
  server.Post(R"(/sessions/([^/]+)/moves)",
              [&](const httplib::Request& req, httplib::Response& res) {
                guarded(res, 200, [&] { return sessions.submit(req.matches[1], parse_body(req)); });
              });
  server.Post(R"(/sessions/([^/]+)/engine-move)",
              [&](const httplib::Request& req, httplib::Response& res) {
                guarded(res, 200, [&] { return sessions.engine_move(req.matches[1]); });
              });
  server.Get("/analyze", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, 200, [&] {
      if (!req.has_param("state")) throw ApiError(400, "missing 'state' query parameter");
      return sessions.analyze(req.get_param_value("state"));
    });
  });
}

bool serve(const std::string& host, int port, GrundyTable& table) {
  SessionManager sessions(table);
  httplib::Server server;
  register_routes(server, sessions);
  return server.listen(host, port);
}

}  // namespace sprouts::api
