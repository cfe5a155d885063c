#pragma once

// Two-spot triangle-free Brussels sprouts, BS2[p,q], modelled through its
// decomposition: the first move x1-y1 is forced up to renaming of tips, and
// the reply x_i-y_j (i, j >= 2) splits the board into the circular sum
// CS[i-2,1,j-2,1] + CS[p-i,1,q-j,1]. From there on play is a plain GameSum.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "sprouts/circular.hpp"
#include "sprouts/solver.hpp"

namespace sprouts {

enum class Bs2Phase { start, after_forced_move, decomposed };

struct Bs2ForcedMove {
  friend auto operator<=>(const Bs2ForcedMove&, const Bs2ForcedMove&) = default;
};

// Joins tip x_i to tip y_j; 2 <= i <= p, 2 <= j <= q.
struct Bs2SecondMove {
  std::int64_t i = 2;
  std::int64_t j = 2;
  friend auto operator<=>(const Bs2SecondMove&, const Bs2SecondMove&) = default;
};

using Bs2Move = std::variant<Bs2ForcedMove, Bs2SecondMove, SumMove>;

struct Bs2Position {
  Bs2Phase phase = Bs2Phase::start;
  std::int64_t p = 0;
  std::int64_t q = 0;
  GameSum sum;  // populated once decomposed

  friend bool operator==(const Bs2Position&, const Bs2Position&) = default;
};

class NoWinningMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument unless p, q >= 3.
Bs2Position bs2_start(std::int64_t p, std::int64_t q);

// Sum produced by the reply x_i-y_j after the forced move.
GameSum bs2_second_move_result(std::int64_t p, std::int64_t q, const Bs2SecondMove& m);

// All distinct sums reachable by the reply, deduplicated as multisets of
// canonical components.
std::vector<GameSum> bs2_children_after_forced_move(std::int64_t p, std::int64_t q);

// Nimber of the node after the forced move (mex over the reply sums).
Nimber bs2_after_forced_move_nimber(std::int64_t p, std::int64_t q, GrundyTable& table);

// Nimber of the start position; the root has the forced move as its only child.
Nimber bs2_nimber(std::int64_t p, std::int64_t q, GrundyTable& table);

PlayLength bs2_play_length_bounds(std::int64_t p, std::int64_t q, GrundyTable& table);

std::vector<Bs2Move> bs2_legal_moves(const Bs2Position& pos);
bool is_terminal(const Bs2Position& pos);
Nimber grundy(const Bs2Position& pos, GrundyTable& table);

// Throws std::invalid_argument for a move that is illegal in this phase.
Bs2Position apply_move(const Bs2Position& pos, const Bs2Move& m);

// Move leaving the whole position at nimber 0. Throws NoWinningMove when the
// mover faces nimber 0 (or a terminal position).
Bs2Move bs2_second_player_strategy(const Bs2Position& pos, GrundyTable& table);

}  // namespace sprouts
