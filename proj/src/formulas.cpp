#include "sprouts/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sprouts::formulas {

std::int64_t GameSpec::total_tips() const {
  return std::accumulate(tips.begin(), tips.end(), std::int64_t{0});
}

void validate(const GameSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("the game needs at least one spot (n >= 1)");
  if (static_cast<std::int64_t>(spec.tips.size()) != spec.n) {
    throw std::invalid_argument("expected " + std::to_string(spec.n) + " tip counts, got " +
                                std::to_string(spec.tips.size()));
  }
  for (auto t : spec.tips) {
    if (t < 0) throw std::invalid_argument("tip counts must be non-negative");
  }
  if (spec.genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (spec.girth < 3) throw std::invalid_argument("girth bound must be at least 3");
}

namespace {

MoveCountSet counts(const GameSpec& spec, std::int64_t step) {
  validate(spec);
  const std::int64_t base = (spec.n - 2) + spec.total_tips();
  if (base < 0) {
    throw std::invalid_argument(
        "degenerate game: (n - 2) + sum of tips is negative; the count formula needs "
        "enough open tips for the drawing to be connected");
  }
  MoveCountSet out;
  for (std::int64_t j = 0; j <= spec.genus; ++j) out.insert(base + step * j);
  return out;
}

}  // namespace

std::int64_t forest_moves(const GameSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("the game needs at least one spot (n >= 1)");
  return spec.n - 1;
}

MoveCountSet orientable_moves(const GameSpec& spec) { return counts(spec, 2); }

MoveCountSet nonorientable_moves(const GameSpec& spec) { return counts(spec, 1); }

bool first_player_wins_planar(const GameSpec& spec) {
  validate(spec);
  return (spec.n + spec.total_tips()) % 2 == 1;
}

bool girth_forces_tree(const GameSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("the game needs at least one spot (n >= 1)");
  if (spec.girth < 3) throw std::invalid_argument("girth bound must be at least 3");
  return spec.girth >= 2 * spec.n + 1;
}

std::pair<std::int64_t, std::int64_t> bs_p4_move_bounds(const GameSpec& spec) {
  validate(spec);
  if (spec.n < 2) {
    throw std::invalid_argument("triangle-free move bounds need at least two spots (n >= 2)");
  }
  if (std::any_of(spec.tips.begin(), spec.tips.end(), [](auto t) { return t < 3; })) {
    throw std::invalid_argument("triangle-free move bounds need every spot to have >= 3 tips");
  }
  return {4 + spec.n, (spec.n - 2) + spec.total_tips()};
}

Cs4Case cs4_formula_case(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) throw std::invalid_argument("p and q must be non-negative");
  if (p > q) std::swap(p, q);
  if (p == q) return Cs4Case::equal;
  // |p - 2| keeps p = 0 and p = 1 on the saturated branch.
  const std::int64_t threshold = 2 * p - (p >= 2 ? p - 2 : 2 - p) / 2;
  return q >= threshold ? Cs4Case::saturated : Cs4Case::middle;
}

Nimber cs4_nimber_formula(std::int64_t p, std::int64_t q) {
  const Cs4Case which = cs4_formula_case(p, q);
  if (p > q) std::swap(p, q);
  switch (which) {
    case Cs4Case::equal:
      return 1;
    case Cs4Case::saturated:
      return static_cast<Nimber>(2 * p);
    case Cs4Case::middle: {
      // Residue representative in 1..5, with 5 standing for 0.
      std::int64_t i = (p + q) % 5;
      if (i == 0) i = 5;
      return static_cast<Nimber>(4 * (p + q - i) / 5 + 2 * (i / 4));
    }
  }
  return 0;
}

}  // namespace sprouts::formulas
