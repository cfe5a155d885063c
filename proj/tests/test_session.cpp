#include <random>

#include "doctest.h"
#include "sprouts/session.hpp"

using namespace sprouts;
using namespace sprouts::api;

namespace {

int status_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ApiError& e) {
    return e.status();
  }
  return 0;
}

}  // namespace

TEST_CASE("create sessions") {
  GrundyTable table;
  SessionManager sm(table);
  const json cs4 = sm.create({{"kind", "cs4"}, {"p", 3}, {"q", 4}});
  CHECK(cs4["state"] == "CS[3,1,4,1]");
  CHECK(cs4["nimber"] == 4);
  CHECK(cs4["status"] == "ongoing");
  CHECK(cs4["to_move"] == 1);

  const json bs2 = sm.create({{"kind", "bs2"}, {"p", 3}, {"q", 3}, {"human_player", 1}});
  CHECK(bs2["state"] == "BS2[3,3]");
  CHECK(bs2["phase"] == "start");
  CHECK(bs2["nimber"] == 0);

  const json circ = sm.create({{"kind", "circular"}, {"state", "CS[1,0,2,0,1]"}});
  CHECK(circ["state"] == "CS[1,0,2,0,1]");
  const json circ2 = sm.create({{"kind", "circular"}, {"tips", {1, 1, 1, 1}}});
  CHECK(circ2["nimber"] == 1);

  CHECK(status_of([&] { sm.create({{"kind", "cs4"}, {"p", -1}, {"q", 3}}); }) == 400);
  CHECK(status_of([&] { sm.create({{"kind", "bs2"}, {"p", 2}, {"q", 3}}); }) == 400);
  CHECK(status_of([&] { sm.create({{"kind", "chess"}}); }) == 400);
  CHECK(status_of([&] { sm.create({{"kind", "circular"}, {"state", "CS[1,2"}}); }) == 400);
  CHECK(status_of([&] { sm.create({{"kind", "circular"}, {"state", "BS2[3,3]"}}); }) == 400);
  CHECK(status_of([&] { sm.create({{"kind", "cs4"}, {"p", 1}, {"q", 1}, {"human_player", 3}}); }) == 400);
  CHECK(status_of([&] { sm.get("nope"); }) == 404);
}

TEST_CASE("legal move listing") {
  GrundyTable table;
  SessionManager sm(table);
  const std::string id = sm.create({{"kind", "circular"}, {"state", "CS[1,1,1,1]"}})["id"];
  const json plain = sm.moves(id, false);
  REQUIRE(plain["moves"].size() == 2);
  CHECK_FALSE(plain["moves"][0].contains("nimber"));
  const json hinted = sm.moves(id, true);
  for (const auto& m : hinted["moves"]) CHECK(m["nimber"] == 0);

  const std::string bs2 = sm.create({{"kind", "bs2"}, {"p", 4}, {"q", 5}})["id"];
  const json opening = sm.moves(bs2, false);
  REQUIRE(opening["moves"].size() == 1);
  CHECK(opening["moves"][0]["move"]["type"] == "forced");

  const std::string done = sm.create({{"kind", "circular"}, {"state", "CS[0,0,9,0]"}})["id"];
  CHECK(sm.get(done)["status"] == "finished");
  CHECK(sm.get(done)["winner"] == 2);
  try {
    sm.moves(done, false);
    FAIL("expected a conflict");
  } catch (const ApiError& e) {
    CHECK(e.status() == 409);
    CHECK(e.body()["moves"].empty());
    CHECK(e.body()["status"] == "finished");
  }
}

TEST_CASE("submitting moves") {
  GrundyTable table;
  SessionManager sm(table);
  const std::string id = sm.create({{"kind", "cs4"}, {"p", 3}, {"q", 4}, {"human_player", 1}})["id"];

  try {
    sm.submit(id, {{"type", "join"}, {"component", 0}, {"i", 1}, {"j", 2}, {"a", 0}, {"b", 0}});
    FAIL("expected rejection");
  } catch (const ApiError& e) {
    CHECK(e.status() == 400);
    CHECK(std::string(e.what()).find("would create a triangle (girth < 4)") != std::string::npos);
    CHECK(e.body()["legal_moves"].size() == 3 * 4 + 1);
  }
  CHECK(status_of([&] { sm.submit(id, {{"type", "reply"}, {"i", 2}, {"j", 2}}); }) == 400);
  CHECK(status_of([&] { sm.submit(id, {{"type", "join"}, {"i", 1}}); }) == 400);
  CHECK(status_of([&] { sm.engine_move(id); }) == 409);

  const json after = sm.submit(id, {{"type", "join"}, {"component", 0}, {"i", 2}, {"j", 4}, {"a", 0}, {"b", 0}});
  CHECK(after["to_move"] == 2);
  CHECK(after["history"].size() == 1);
  CHECK(status_of([&] { sm.submit(id, {{"type", "join"}, {"component", 0}, {"i", 1}, {"j", 3}, {"a", 0}, {"b", 0}}); }) == 409);

  const json reply = sm.engine_move(id);
  CHECK(reply["session"]["to_move"] == 1);
  CHECK(reply["session"]["history"].size() == 2);
}

TEST_CASE("engine replies restore nimber zero and history replays") {
  GrundyTable table;
  SessionManager sm(table);
  std::mt19937_64 rng(43);
  for (int game = 0; game < 30; ++game) {
    const json created = game % 2 ? sm.create({{"kind", "cs4"}, {"p", rng() % 7}, {"q", rng() % 7}, {"human_player", 1}})
                                  : sm.create({{"kind", "bs2"}, {"p", 3 + rng() % 4}, {"q", 3 + rng() % 4}, {"human_player", 1}});
    const std::string id = created["id"];
    SessionParams params = parse_params(created);
    json state = created;
    while (state["status"] == "ongoing") {
      if (state["to_move"] == 1) {
        const json moves = sm.moves(id, false)["moves"];
        state = sm.submit(id, moves[rng() % moves.size()]["move"]);
      } else {
        const bool was_nonzero = state["nimber"] != 0;
        const json r = sm.engine_move(id);
        state = r["session"];
        if (was_nonzero) {
          CHECK(r["winning"] == true);
          CHECK(state["nimber"] == 0);
        }
      }
    }
    const Position replayed = replay(params, sm.history(id));
    CHECK(state_notation(replayed) == state["state"]);
    CHECK(is_terminal(replayed));
  }
}

TEST_CASE("engine against engine from BS2 openings") {
  GrundyTable table;
  SessionManager sm(table);
  for (int p = 3; p <= 5; ++p) {
    for (int q = p; q <= 6; ++q) {
      const std::string id = sm.create({{"kind", "bs2"}, {"p", p}, {"q", q}, {"human_player", 0}})["id"];
      json s = sm.get(id);
      while (s["status"] == "ongoing") s = sm.engine_move(id)["session"];
      CHECK(s["winner"] == 2);
      CHECK(s["history"].size() % 2 == 0);
    }
  }
}

TEST_CASE("analysis") {
  GrundyTable table;
  const json a = analyze("CS[3,1,4,1]", table);
  CHECK(a["nimber"] == 4);
  CHECK(a["winning"] == true);
  CHECK(a["winner"] == "first player");
  const json b = analyze("BS2[3,3]", table);
  CHECK(b["nimber"] == 0);
  CHECK(b["winner"] == "second player");
  CHECK(b["play_length"]["min"] == 6);
  const json t = analyze("CS[0,0,9,0]", table);
  CHECK(t["terminal"] == true);
  CHECK(t["best_move"].is_null());
  try {
    analyze("CS[1,", table);
    FAIL("expected parse error");
  } catch (const ApiError& e) {
    CHECK(e.status() == 400);
    CHECK(e.body()["column"] == 6);
  }
}

TEST_CASE("move JSON round-trips") {
  const std::vector<PlayMove> moves{Bs2ForcedMove{}, Bs2SecondMove{3, 5},
                                    SumMove{2, MoveDescriptor{0, 2, 1, 4}}};
  for (const auto& m : moves) CHECK(move_from_json(move_to_json(m)) == m);
}
