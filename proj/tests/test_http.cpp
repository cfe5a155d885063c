#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "sprouts/api_server.hpp"

using namespace sprouts;
using namespace sprouts::api;

namespace {

struct TestServer {
  GrundyTable table;
  SessionManager sessions{table};
  httplib::Server server;
  int port = 0;
  std::thread thread;

  TestServer() {
    register_routes(server, sessions);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~TestServer() {
    server.stop();
    thread.join();
  }
};

json body_of(const httplib::Result& r) {
  REQUIRE(r);
  return json::parse(r->body);
}

}  // namespace

TEST_CASE("HTTP play-through of CS[3,1,4,1]") {
  TestServer ts;
  httplib::Client client("127.0.0.1", ts.port);

  auto created = client.Post("/sessions", R"({"kind":"cs4","p":3,"q":4,"human_player":1})",
                             "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const json session = json::parse(created->body);
  CHECK(session["nimber"] == 4);
  const std::string id = session["id"];

  auto listed = client.Get("/sessions/" + id + "/moves");
  CHECK(listed->status == 200);
  CHECK_FALSE(body_of(listed)["moves"][0].contains("nimber"));
  auto hinted = client.Get("/sessions/" + id + "/moves?hints=true");
  CHECK(body_of(hinted)["moves"][0].contains("nimber"));

  auto bad = client.Post("/sessions/" + id + "/moves",
                         R"({"type":"join","component":0,"i":1,"j":2,"a":0,"b":0})",
                         "application/json");
  CHECK(bad->status == 400);
  CHECK(body_of(bad)["error"].get<std::string>().find("triangle") != std::string::npos);

  auto wrong_turn = client.Post("/sessions/" + id + "/engine-move", "", "application/json");
  CHECK(wrong_turn->status == 409);

  std::vector<json> history;
  json state = session;
  while (state["status"] == "ongoing") {
    if (state["to_move"] == 1) {
      const json first = body_of(client.Get("/sessions/" + id + "/moves"))["moves"][0]["move"];
      auto r = client.Post("/sessions/" + id + "/moves", first.dump(), "application/json");
      CHECK(r->status == 200);
      state = body_of(r);
      history.push_back(first);
    } else {
      const bool nonzero = state["nimber"] != 0;
      auto r = client.Post("/sessions/" + id + "/engine-move", "", "application/json");
      CHECK(r->status == 200);
      const json reply = body_of(r);
      state = reply["session"];
      if (nonzero) CHECK(state["nimber"] == 0);
      history.push_back(reply["move"]);
    }
  }
  const json final_state = body_of(client.Get("/sessions/" + id));
  CHECK(final_state["history"] == json(history));
  CHECK(final_state["status"] == "finished");
  CHECK(client.Get("/sessions/" + id + "/moves")->status == 409);
  // CS[3,1,4,1] is a first-player win, but the human plays naively.
  CHECK(final_state["winner"] == 2);
}

TEST_CASE("HTTP analysis and errors") {
  TestServer ts;
  httplib::Client client("127.0.0.1", ts.port);
  auto a = client.Get("/analyze?state=CS%5B3,1,4,1%5D");
  REQUIRE(a);
  CHECK(a->status == 200);
  CHECK(body_of(a)["nimber"] == 4);
  auto b = client.Get("/analyze?state=BS2%5B3,3%5D");
  CHECK(body_of(b)["nimber"] == 0);
  CHECK(client.Get("/analyze")->status == 400);
  CHECK(client.Get("/analyze?state=CS%5B1")->status == 400);
  CHECK(client.Get("/sessions/missing")->status == 404);
  CHECK(client.Post("/sessions", "{not json", "application/json")->status == 400);
  CHECK(client.Post("/sessions", R"({"kind":"cs4","p":-1,"q":2})", "application/json")->status == 400);
}
