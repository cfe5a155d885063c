#include "sprouts/bs2.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sprouts {

namespace {

void require_hypothesis(std::int64_t p, std::int64_t q) {
  if (p < 3 || q < 3) {
    throw std::invalid_argument("BS2[p,q] requires p >= 3 and q >= 3 (got p=" +
                                std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
  if (p > static_cast<std::int64_t>(kMaxTipsPerSpot) ||
      q > static_cast<std::int64_t>(kMaxTipsPerSpot)) {
    throw std::invalid_argument("BS2[p,q] supports at most " + std::to_string(kMaxTipsPerSpot) +
                                " tips per spot");
  }
}

CircularState cs4(std::int64_t a, std::int64_t b) {
  return CircularState{static_cast<TipCount>(a), 1, static_cast<TipCount>(b), 1};
}

template <typename Fn>
void for_each_second_move(std::int64_t p, std::int64_t q, Fn&& fn) {
  for (std::int64_t i = 2; i <= p; ++i) {
    for (std::int64_t j = 2; j <= q; ++j) fn(Bs2SecondMove{i, j});
  }
}

}  // namespace

Bs2Position bs2_start(std::int64_t p, std::int64_t q) {
  require_hypothesis(p, q);
  return Bs2Position{Bs2Phase::start, p, q, {}};
}

GameSum bs2_second_move_result(std::int64_t p, std::int64_t q, const Bs2SecondMove& m) {
  require_hypothesis(p, q);
  if (m.i < 2 || m.i > p || m.j < 2 || m.j > q) {
    throw std::invalid_argument("the reply must join x_i to y_j with 2 <= i <= p, 2 <= j <= q");
  }
  return GameSum{{cs4(m.i - 2, m.j - 2), cs4(p - m.i, q - m.j)}};
}

std::vector<GameSum> bs2_children_after_forced_move(std::int64_t p, std::int64_t q) {
  require_hypothesis(p, q);
  std::set<std::vector<CircularState>> seen;
  std::vector<GameSum> out;
  for_each_second_move(p, q, [&](const Bs2SecondMove& m) {
    GameSum g = bs2_second_move_result(p, q, m);
    if (seen.insert(canonical_components(g)).second) out.push_back(std::move(g));
  });
  return out;
}

Nimber bs2_after_forced_move_nimber(std::int64_t p, std::int64_t q, GrundyTable& table) {
  std::vector<Nimber> values;
  for (const auto& g : bs2_children_after_forced_move(p, q)) values.push_back(grundy(g, table));
  return mex(values);
}

Nimber bs2_nimber(std::int64_t p, std::int64_t q, GrundyTable& table) {
  const Nimber only_child = bs2_after_forced_move_nimber(p, q, table);
  return mex(std::span<const Nimber>(&only_child, 1));
}

PlayLength bs2_play_length_bounds(std::int64_t p, std::int64_t q, GrundyTable& table) {
  bool any = false;
  PlayLength out;
  for (const auto& g : bs2_children_after_forced_move(p, q)) {
    const PlayLength l = play_length_bounds(g, table);
    if (!any) {
      out = l;
      any = true;
    } else {
      out.min = std::min(out.min, l.min);
      out.max = std::max(out.max, l.max);
    }
  }
  out.min += 2;
  out.max += 2;
  return out;
}

std::vector<Bs2Move> bs2_legal_moves(const Bs2Position& pos) {
  std::vector<Bs2Move> moves;
  switch (pos.phase) {
    case Bs2Phase::start:
      moves.emplace_back(Bs2ForcedMove{});
      break;
    case Bs2Phase::after_forced_move:
      for_each_second_move(pos.p, pos.q, [&](const Bs2SecondMove& m) { moves.emplace_back(m); });
      break;
    case Bs2Phase::decomposed:
      for (const auto& m : legal_moves(pos.sum)) moves.emplace_back(m);
      break;
  }
  return moves;
}

bool is_terminal(const Bs2Position& pos) {
  return pos.phase == Bs2Phase::decomposed && is_terminal(pos.sum);
}

Nimber grundy(const Bs2Position& pos, GrundyTable& table) {
  switch (pos.phase) {
    case Bs2Phase::start:
      return bs2_nimber(pos.p, pos.q, table);
    case Bs2Phase::after_forced_move:
      return bs2_after_forced_move_nimber(pos.p, pos.q, table);
    case Bs2Phase::decomposed:
      break;
  }
  return grundy(pos.sum, table);
}

Bs2Position apply_move(const Bs2Position& pos, const Bs2Move& m) {
  Bs2Position next = pos;
  switch (pos.phase) {
    case Bs2Phase::start:
      if (!std::holds_alternative<Bs2ForcedMove>(m)) {
        throw std::invalid_argument("illegal move: the opening move must join x1 to y1");
      }
      next.phase = Bs2Phase::after_forced_move;
      return next;
    case Bs2Phase::after_forced_move: {
      const auto* reply = std::get_if<Bs2SecondMove>(&m);
      if (!reply) throw std::invalid_argument("illegal move: expected a reply joining x_i to y_j");
      if (reply->i < 2 || reply->i > pos.p || reply->j < 2 || reply->j > pos.q) {
        throw std::invalid_argument(
            "illegal move: the reply must join x_i to y_j with 2 <= i <= p, 2 <= j <= q; "
            "other joins would create a 2-cycle or a triangle (girth < 4)");
      }
      next.sum = bs2_second_move_result(pos.p, pos.q, *reply);
      next.phase = Bs2Phase::decomposed;
      return next;
    }
    case Bs2Phase::decomposed: {
      const auto* move = std::get_if<SumMove>(&m);
      if (!move) throw std::invalid_argument("illegal move: expected a move inside a component");
      next.sum = apply_move(pos.sum, *move);
      return next;
    }
  }
  return next;
}

Bs2Move bs2_second_player_strategy(const Bs2Position& pos, GrundyTable& table) {
  switch (pos.phase) {
    case Bs2Phase::start:
      throw NoWinningMove("the start position has nimber 0: the mover cannot win");
    case Bs2Phase::after_forced_move: {
      Bs2Move found = Bs2ForcedMove{};
      bool ok = false;
      for_each_second_move(pos.p, pos.q, [&](const Bs2SecondMove& m) {
        if (!ok && grundy(bs2_second_move_result(pos.p, pos.q, m), table) == 0) {
          found = m;
          ok = true;
        }
      });
      if (!ok) throw NoWinningMove("no reply leaves nimber 0");
      return found;
    }
    case Bs2Phase::decomposed:
      break;
  }
  auto best = best_move(pos.sum, table);
  if (!best) throw NoWinningMove("the position is terminal");
  if (!best->winning) throw NoWinningMove("the position has nimber 0: every move loses");
  return best->move;
}

}  // namespace sprouts
