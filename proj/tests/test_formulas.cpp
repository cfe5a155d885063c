#include <stdexcept>

#include "doctest.h"
#include "sprouts/formulas.hpp"

using namespace sprouts::formulas;

namespace {
GameSpec spec(std::vector<std::int64_t> tips, std::int64_t k = 0, std::int64_t g = 4) {
  return GameSpec{static_cast<std::int64_t>(tips.size()), std::move(tips), k, g};
}
}  // namespace

TEST_CASE("forest move count") {
  CHECK(forest_moves(spec({0, 0, 0, 0, 0})) == 4);
  CHECK(forest_moves(spec({3})) == 0);
  CHECK(forest_moves(spec({3, 3})) == 1);
  CHECK_THROWS_AS(forest_moves(GameSpec{0, {}, 0, 4}), std::invalid_argument);
}

TEST_CASE("orientable and non-orientable move counts") {
  CHECK(orientable_moves(spec({4, 4}, 0)) == MoveCountSet{8});
  CHECK(orientable_moves(spec({4, 4}, 1)) == MoveCountSet{8, 10});
  CHECK(orientable_moves(spec({4}, 0)) == MoveCountSet{3});
  CHECK(nonorientable_moves(spec({4, 4}, 2)) == MoveCountSet{8, 9, 10});
  CHECK(nonorientable_moves(spec({4}, 0)) == MoveCountSet{3});
  CHECK_THROWS_AS(nonorientable_moves(spec({0}, 0)), std::invalid_argument);
  CHECK_THROWS_AS(orientable_moves(spec({0}, 0)), std::invalid_argument);
  CHECK_THROWS_AS(orientable_moves(spec({4, 4}, -1)), std::invalid_argument);
  CHECK_THROWS_AS(orientable_moves(GameSpec{3, {4, 4}, 0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(orientable_moves(spec({4, -1})), std::invalid_argument);
  // Classic crosses: 5n - 2 moves.
  for (std::int64_t n = 1; n <= 8; ++n) {
    CHECK(orientable_moves(spec(std::vector<std::int64_t>(n, 4))) == MoveCountSet{5 * n - 2});
  }
}

TEST_CASE("move-count parity structure") {
  for (std::int64_t k = 0; k <= 4; ++k) {
    const auto o = orientable_moves(spec({3, 5, 2}, k));
    for (auto v : o) CHECK(v % 2 == *o.begin() % 2);
    const auto no = nonorientable_moves(spec({3, 5, 2}, k));
    bool odd = false, even = false;
    for (auto v : no) (v % 2 ? odd : even) = true;
    CHECK((odd && even) == (k >= 1));
    CHECK(o.size() == static_cast<std::size_t>(k + 1));
  }
}

TEST_CASE("planar winner by parity") {
  CHECK(first_player_wins_planar(spec({4})));
  CHECK_FALSE(first_player_wins_planar(spec({4, 4})));
  CHECK(first_player_wins_planar(spec({3, 4})));
  // Same winner on every orientable surface.
  for (std::int64_t k = 0; k < 4; ++k) {
    for (auto v : orientable_moves(spec({3, 4}, k))) CHECK(v % 2 == 1);
  }
}

TEST_CASE("girth threshold for forests") {
  CHECK(girth_forces_tree(GameSpec{3, {}, 0, 7}));
  CHECK_FALSE(girth_forces_tree(GameSpec{3, {}, 0, 6}));
  CHECK(girth_forces_tree(GameSpec{1, {}, 0, 3}));
  CHECK_THROWS_AS(girth_forces_tree(GameSpec{2, {}, 0, 2}), std::invalid_argument);
}

TEST_CASE("triangle-free move bounds") {
  CHECK(bs_p4_move_bounds(spec({3, 3})) == std::pair<std::int64_t, std::int64_t>{6, 6});
  CHECK(bs_p4_move_bounds(spec({4, 5})) == std::pair<std::int64_t, std::int64_t>{6, 9});
  CHECK(bs_p4_move_bounds(spec({3, 3, 3})) == std::pair<std::int64_t, std::int64_t>{7, 10});
  CHECK_THROWS_AS(bs_p4_move_bounds(spec({3})), std::invalid_argument);
  CHECK_THROWS_AS(bs_p4_move_bounds(spec({3, 2})), std::invalid_argument);
}

TEST_CASE("closed-form CS[p,1,q,1] nimber examples") {
  CHECK(cs4_nimber_formula(3, 3) == 1);
  CHECK(cs4_nimber_formula(3, 4) == 4);
  CHECK(cs4_nimber_formula(3, 6) == 6);
  CHECK(cs4_nimber_formula(0, 7) == 0);
  CHECK(cs4_nimber_formula(1, 1) == 1);
  CHECK(cs4_nimber_formula(1, 9) == 2);
  CHECK(cs4_nimber_formula(2, 3) == 2);
  CHECK_THROWS_AS(cs4_nimber_formula(-1, 3), std::invalid_argument);
}

TEST_CASE("closed-form structure over a sweep") {
  for (std::int64_t q = 0; q <= 60; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      const auto v = cs4_nimber_formula(p, q);
      CHECK(v == cs4_nimber_formula(q, p));
      CHECK((v % 2 == 0) == (p != q));
      const auto which = cs4_formula_case(p, q);
      CHECK((which == Cs4Case::equal) == (p == q));
      if (which == Cs4Case::saturated) CHECK(v == static_cast<sprouts::Nimber>(2 * p));
      // Upper bound seen by search: never above 2p.
      CHECK(v <= static_cast<sprouts::Nimber>(std::max<std::int64_t>(2 * p, 1)));
    }
  }
}

TEST_CASE("girth forcing a tree reduces to the forest count") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t g = 3; g <= 15; ++g) {
      const GameSpec s{n, std::vector<std::int64_t>(n, 3), 0, g};
      if (girth_forces_tree(s)) CHECK(forest_moves(s) == n - 1);
      CHECK(girth_forces_tree(s) == (g >= 2 * n + 1));
    }
  }
}
