#include "sprouts/session.hpp"

#include <random>
#include <sstream>

#include "sprouts/notation.hpp"

namespace sprouts::api {

ApiError::ApiError(int status, const std::string& message, json extra)
    : std::runtime_error(message), status_(status), extra_(std::move(extra)) {}

json ApiError::body() const {
  json b = extra_.is_object() ? extra_ : json::object();
  b["error"] = what();
  return b;
}

namespace {

const char* kind_name(GameKind k) {
  switch (k) {
    case GameKind::cs4: return "cs4";
    case GameKind::circular: return "circular";
    case GameKind::bs2: return "bs2";
  }
  return "?";
}

const char* phase_name(Bs2Phase p) {
  switch (p) {
    case Bs2Phase::start: return "start";
    case Bs2Phase::after_forced_move: return "after-forced-move";
    case Bs2Phase::decomposed: return "decomposed";
  }
  return "?";
}

std::int64_t int_field(const json& body, const char* name) {
  if (!body.contains(name) || !body[name].is_number_integer()) {
    throw ApiError(400, std::string("missing or non-integer field '") + name + "'");
  }
  return body[name].get<std::int64_t>();
}

json legal_moves_json(const Position& pos) {
  json out = json::array();
  for (const auto& m : legal_moves(pos)) out.push_back(move_to_json(m));
  return out;
}

}  // namespace

SessionParams parse_params(const json& body) {
  if (!body.is_object()) throw ApiError(400, "request body must be a JSON object");
  SessionParams params;
  const std::string kind = body.value("kind", std::string{});
  if (body.contains("human_player")) {
    if (!body["human_player"].is_number_integer()) throw ApiError(400, "human_player must be 0, 1 or 2");
    params.human_player = body["human_player"].get<int>();
    if (params.human_player < 0 || params.human_player > 2) {
      throw ApiError(400, "human_player must be 0, 1 or 2");
    }
  }
  try {
    if (kind == "cs4") {
      params.kind = GameKind::cs4;
      params.p = int_field(body, "p");
      params.q = int_field(body, "q");
      if (params.p < 0 || params.q < 0) throw ApiError(400, "p and q must be non-negative");
      initial_position(params);
    } else if (kind == "bs2") {
      params.kind = GameKind::bs2;
      params.p = int_field(body, "p");
      params.q = int_field(body, "q");
      bs2_start(params.p, params.q);
    } else if (kind == "circular") {
      params.kind = GameKind::circular;
      if (body.contains("state") && body["state"].is_string()) {
        auto parsed = parse_position(body["state"].get<std::string>());
        auto* sum = std::get_if<GameSum>(&parsed);
        if (!sum) throw ApiError(400, "a circular session needs a CS[...] state");
        params.circular = *sum;
      } else if (body.contains("tips") && body["tips"].is_array()) {
        std::vector<TipCount> tips;
        for (const auto& t : body["tips"]) {
          if (!t.is_number_integer() || t.get<std::int64_t>() < 0) {
            throw ApiError(400, "tips must be non-negative integers");
          }
          tips.push_back(t.get<TipCount>());
        }
        params.circular = GameSum{{CircularState(std::move(tips))}};
      } else {
        throw ApiError(400, "a circular session needs 'state' or 'tips'");
      }
    } else {
      throw ApiError(400, "kind must be one of cs4, circular, bs2");
    }
  } catch (const ParseError& e) {
    throw ApiError(400, e.what());
  } catch (const std::invalid_argument& e) {
    throw ApiError(400, e.what());
  }
  return params;
}

Position initial_position(const SessionParams& params) {
  switch (params.kind) {
    case GameKind::cs4:
      if (params.p < 0 || params.q < 0 || params.p > std::int64_t{kMaxTipsPerSpot} || params.q > std::int64_t{kMaxTipsPerSpot}) {
        throw std::invalid_argument("p and q must lie in [0, " + std::to_string(kMaxTipsPerSpot) + "]");
      }
      return GameSum{{CircularState{static_cast<TipCount>(params.p), 1,
                                    static_cast<TipCount>(params.q), 1}}};
    case GameKind::circular:
      return params.circular;
    case GameKind::bs2:
      return bs2_start(params.p, params.q);
  }
  return GameSum{};
}

std::vector<PlayMove> legal_moves(const Position& pos) {
  if (const auto* b = std::get_if<Bs2Position>(&pos)) return bs2_legal_moves(*b);
  std::vector<PlayMove> out;
  for (const auto& m : legal_moves(std::get<GameSum>(pos))) out.emplace_back(m);
  return out;
}

bool is_terminal(const Position& pos) {
  return std::visit([](const auto& p) { return sprouts::is_terminal(p); }, pos);
}

Position apply_move(const Position& pos, const PlayMove& m) {
  if (const auto* b = std::get_if<Bs2Position>(&pos)) return sprouts::apply_move(*b, m);
  const auto* move = std::get_if<SumMove>(&m);
  if (!move) throw std::invalid_argument("illegal move: expected a move inside a component");
  return sprouts::apply_move(std::get<GameSum>(pos), *move);
}

Nimber grundy(const Position& pos, GrundyTable& table) {
  return std::visit([&](const auto& p) { return sprouts::grundy(p, table); }, pos);
}

std::string state_notation(const Position& pos) {
  if (const auto* b = std::get_if<Bs2Position>(&pos)) {
    if (b->phase == Bs2Phase::decomposed) return to_notation(b->sum);
    return to_notation(Bs2Spec{b->p, b->q});
  }
  return to_notation(std::get<GameSum>(pos));
}

Position replay(const SessionParams& params, const std::vector<PlayMove>& history) {
  Position pos = initial_position(params);
  for (const auto& m : history) pos = apply_move(pos, m);
  return pos;
}

std::optional<std::pair<PlayMove, bool>> engine_choice(const Position& pos, GrundyTable& table) {
  if (is_terminal(pos)) return std::nullopt;
  if (const auto* b = std::get_if<Bs2Position>(&pos)) {
    try {
      return std::pair<PlayMove, bool>{bs2_second_player_strategy(*b, table), true};
    } catch (const NoWinningMove&) {
      return std::pair<PlayMove, bool>{bs2_legal_moves(*b).front(), false};
    }
  }
  auto best = best_move(std::get<GameSum>(pos), table);
  if (!best) return std::nullopt;
  return std::pair<PlayMove, bool>{best->move, best->winning};
}

json move_to_json(const PlayMove& m) {
  if (std::holds_alternative<Bs2ForcedMove>(m)) return {{"type", "forced"}};
  if (const auto* r = std::get_if<Bs2SecondMove>(&m)) {
    return {{"type", "reply"}, {"i", r->i}, {"j", r->j}};
  }
  const auto& s = std::get<SumMove>(m);
  return {{"type", "join"},
          {"component", s.component},
          {"i", s.move.i + 1},
          {"j", s.move.j + 1},
          {"a", s.move.a},
          {"b", s.move.b}};
}

PlayMove move_from_json(const json& j) {
  if (!j.is_object()) throw ApiError(400, "a move must be a JSON object");
  const std::string type = j.value("type", std::string("join"));
  if (type == "forced") return Bs2ForcedMove{};
  if (type == "reply") return Bs2SecondMove{int_field(j, "i"), int_field(j, "j")};
  if (type != "join") throw ApiError(400, "move type must be forced, reply or join");
  const auto component = int_field(j, "component");
  const auto i = int_field(j, "i");
  const auto jj = int_field(j, "j");
  const auto a = int_field(j, "a");
  const auto b = int_field(j, "b");
  if (component < 0 || i < 1 || jj < 1 || a < 0 || b < 0 || a > std::int64_t{kMaxTipsPerSpot} ||
      b > std::int64_t{kMaxTipsPerSpot}) {
    throw ApiError(400, "move fields out of range (spots are numbered from 1)");
  }
  return SumMove{static_cast<std::size_t>(component),
                 {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1),
                  static_cast<TipCount>(a), static_cast<TipCount>(b)}};
}

json analyze(const std::string& state, GrundyTable& table) {
  ParsedPosition parsed;
  try {
    parsed = parse_position(state);
  } catch (const ParseError& e) {
    throw ApiError(400, e.what(), {{"column", e.column()}});
  }
  Position pos;
  try {
    if (const auto* b = std::get_if<Bs2Spec>(&parsed)) {
      pos = bs2_start(b->p, b->q);
    } else {
      pos = std::get<GameSum>(parsed);
    }
  } catch (const std::invalid_argument& e) {
    throw ApiError(400, e.what());
  }

  const Nimber n = grundy(pos, table);
  json out = {{"state", state_notation(pos)},
              {"nimber", n},
              {"terminal", is_terminal(pos)},
              {"winner", n != 0 ? "first player" : "second player"}};
  PlayLength len;
  if (const auto* sum = std::get_if<GameSum>(&pos)) {
    len = play_length_bounds(*sum, table);
    json comps = json::array();
    for (const auto& c : sum->components) {
      comps.push_back({{"state", to_notation(c)}, {"nimber", grundy(c, table)}});
    }
    out["components"] = std::move(comps);
  } else {
    const auto& b = std::get<Bs2Position>(pos);
    len = bs2_play_length_bounds(b.p, b.q, table);
    out["phase"] = phase_name(b.phase);
    out["after_forced_move_nimber"] = bs2_after_forced_move_nimber(b.p, b.q, table);
  }
  out["play_length"] = {{"min", len.min}, {"max", len.max}};
  if (auto choice = engine_choice(pos, table)) {
    out["best_move"] = move_to_json(choice->first);
    out["winning"] = choice->second;
  } else {
    out["best_move"] = nullptr;
    out["winning"] = false;
  }
  return out;
}

std::shared_ptr<SessionManager::Slot> SessionManager::find(const std::string& id) {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError(404, "no session with id '" + id + "'");
  return it->second;
}

std::string SessionManager::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex << rng() << '-' << ++counter_;
  return os.str();
}

json SessionManager::describe(const Session& s) {
  const bool finished = is_terminal(s.current);
  json out = {
      {"id", s.id},
      {"kind", kind_name(s.params.kind)},
      {"state", state_notation(s.current)},
      {"nimber", grundy(s.current, table_)},
      {"to_move", s.to_move()},
      {"human_player", s.params.human_player},
      {"status", finished ? "finished" : "ongoing"},
      {"winner", finished ? json(s.to_move() == 1 ? 2 : 1) : json(nullptr)},
  };
  if (s.params.kind != GameKind::circular) {
    out["p"] = s.params.p;
    out["q"] = s.params.q;
  }
  if (const auto* b = std::get_if<Bs2Position>(&s.current)) out["phase"] = phase_name(b->phase);
  json hist = json::array();
  for (const auto& m : s.history) hist.push_back(move_to_json(m));
  out["history"] = std::move(hist);
  return out;
}

json SessionManager::create(const json& body) {
  SessionParams params = parse_params(body);
  auto slot = std::make_shared<Slot>();
  slot->session.params = params;
  slot->session.current = initial_position(params);
  {
    std::unique_lock lock(mu_);
    slot->session.id = fresh_id();
    sessions_.emplace(slot->session.id, slot);
  }
  std::lock_guard lock(slot->mu);
  return describe(slot->session);
}

json SessionManager::get(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  return describe(slot->session);
}

json SessionManager::moves(const std::string& id, bool hints) {
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  const Session& s = slot->session;
  if (is_terminal(s.current)) {
    throw ApiError(409, "the game is finished", {{"status", "finished"}, {"moves", json::array()}});
  }
  json list = json::array();
  for (const auto& m : legal_moves(s.current)) {
    const Position next = apply_move(s.current, m);
    json entry = {{"move", move_to_json(m)}, {"result", state_notation(next)}};
    if (hints) entry["nimber"] = grundy(next, table_);
    list.push_back(std::move(entry));
  }
  return {{"status", "ongoing"}, {"to_move", s.to_move()}, {"moves", std::move(list)}};
}

json SessionManager::submit(const std::string& id, const json& move_body) {
  const PlayMove m = move_from_json(move_body);
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  Session& s = slot->session;
  if (is_terminal(s.current)) throw ApiError(409, "the game is finished");
  if (s.params.human_player != 0 && s.params.human_player != s.to_move()) {
    throw ApiError(409, "it is not the human player's turn");
  }
  try {
    s.current = apply_move(s.current, m);
  } catch (const std::invalid_argument& e) {
    throw ApiError(400, e.what(), {{"legal_moves", legal_moves_json(s.current)}});
  }
  s.history.push_back(m);
  return describe(s);
}

json SessionManager::engine_move(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  Session& s = slot->session;
  if (is_terminal(s.current)) throw ApiError(409, "the game is finished");
  if (s.params.human_player == s.to_move()) throw ApiError(409, "it is the human player's turn");
  auto choice = engine_choice(s.current, table_);
  if (!choice) throw ApiError(409, "no legal move");
  s.current = apply_move(s.current, choice->first);
  s.history.push_back(choice->first);
  return {{"move", move_to_json(choice->first)},
          {"winning", choice->second},
          {"session", describe(s)}};
}

json SessionManager::analyze(const std::string& state) { return api::analyze(state, table_); }

std::vector<PlayMove> SessionManager::history(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  return slot->session.history;
}

}  // namespace sprouts::api
