#pragma once

// Closed-form move counts and winners for generalized Brussels sprouts, and
// the closed-form nimber of the circular game CS[p,1,q,1].
//
// Every function validates the hypotheses it relies on and throws
// std::invalid_argument with a message naming the violated hypothesis.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sprouts/grundy.hpp"

namespace sprouts::formulas {

struct GameSpec {
  std::int64_t n = 0;               // number of initial spots
  std::vector<std::int64_t> tips;   // open tips per spot
  std::int64_t genus = 0;           // handles or crosscaps of the surface
  std::int64_t girth = 4;           // minimum cycle length allowed

  std::int64_t total_tips() const;
};

// Sorted, non-empty set of possible final move counts.
using MoveCountSet = std::set<std::int64_t>;

// Checks n >= 1, tips.size() == n, tips >= 0, genus >= 0, girth >= 3.
void validate(const GameSpec& spec);

// Forest family: every play has exactly n - 1 moves.
std::int64_t forest_moves(const GameSpec& spec);

// Orientable surface of genus k: {(n-2) + 2j + sum t : j = 0..k}.
MoveCountSet orientable_moves(const GameSpec& spec);

// Non-orientable surface with k crosscaps: {(n-2) + j + sum t : j = 0..k}.
MoveCountSet nonorientable_moves(const GameSpec& spec);

// Plane or orientable surface: first player wins iff n + sum t is odd.
bool first_player_wins_planar(const GameSpec& spec);

// Girth at least 2n + 1 forces the drawing to stay a forest.
bool girth_forces_tree(const GameSpec& spec);

// Triangle-free planar play with n >= 2 and every t >= 3 lasts between
// 4 + n and (n-2) + sum t moves.
std::pair<std::int64_t, std::int64_t> bs_p4_move_bounds(const GameSpec& spec);

// Nimber of CS[p,1,q,1]; symmetric in (p, q).
Nimber cs4_nimber_formula(std::int64_t p, std::int64_t q);

// Which branch of the closed form applies to the normalized pair (p <= q).
enum class Cs4Case { equal, middle, saturated };
Cs4Case cs4_formula_case(std::int64_t p, std::int64_t q);

}  // namespace sprouts::formulas
