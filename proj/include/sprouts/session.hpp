#pragma once

// Play sessions behind the HTTP API. Everything here speaks JSON so that the
// HTTP layer is a thin router; errors carry the HTTP status they map to.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sprouts/bs2.hpp"
#include "sprouts/circular.hpp"
#include "sprouts/solver.hpp"

namespace sprouts::api {

using json = nlohmann::json;

enum class GameKind { cs4, circular, bs2 };

using Position = std::variant<GameSum, Bs2Position>;
using PlayMove = Bs2Move;

struct SessionParams {
  GameKind kind = GameKind::cs4;
  std::int64_t p = 0;
  std::int64_t q = 0;
  GameSum circular;       // starting sum for kind == circular
  int human_player = 1;   // 1 or 2; 0 lets either seat submit (hot seat / analysis)
};

class ApiError : public std::runtime_error {
 public:
  ApiError(int status, const std::string& message, json extra = json::object());
  int status() const noexcept { return status_; }
  json body() const;

 private:
  int status_;
  json extra_;
};

// Throws ApiError(400) on invalid parameters.
SessionParams parse_params(const json& body);
Position initial_position(const SessionParams& params);

std::vector<PlayMove> legal_moves(const Position& pos);
bool is_terminal(const Position& pos);
Position apply_move(const Position& pos, const PlayMove& m);
Nimber grundy(const Position& pos, GrundyTable& table);
std::string state_notation(const Position& pos);

// Reconstructs the current position from the initial one and a history.
Position replay(const SessionParams& params, const std::vector<PlayMove>& history);

// Engine choice: nimber-zeroing move when one exists, else the least legal
// move. Second member reports whether the move wins.
std::optional<std::pair<PlayMove, bool>> engine_choice(const Position& pos, GrundyTable& table);

// Nimber, winner, best move and play-length range of a position given in the
// shared text notation. Throws ApiError(400) on bad notation or parameters.
json analyze(const std::string& state, GrundyTable& table);

json move_to_json(const PlayMove& m);
// Throws ApiError(400) on malformed input.
PlayMove move_from_json(const json& j);

struct Session {
  std::string id;
  SessionParams params;
  Position current;
  std::vector<PlayMove> history;

  int to_move() const { return history.size() % 2 == 0 ? 1 : 2; }
};

class SessionManager {
 public:
  explicit SessionManager(GrundyTable& table) : table_(table) {}

  json create(const json& body);
  json get(const std::string& id);
  json moves(const std::string& id, bool hints);
  json submit(const std::string& id, const json& move);
  json engine_move(const std::string& id);
  json analyze(const std::string& state);

  // Current history of a session, for replay checks.
  std::vector<PlayMove> history(const std::string& id);

 private:
  struct Slot {
    std::mutex mu;
    Session session;
  };

  std::shared_ptr<Slot> find(const std::string& id);
  json describe(const Session& s);
  std::string fresh_id();

  GrundyTable& table_;
  std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t counter_ = 0;
};

}  // namespace sprouts::api
