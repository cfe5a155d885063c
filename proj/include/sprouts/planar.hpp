#pragma once

// Unconstrained Brussels sprouts on the sphere, tracked only through the
// faces of the drawing. A face (region) is bounded by one or more boundary
// walks; along each walk sit the open tips pointing into the face. Spot
// identity is irrelevant without a girth constraint and the tips along a walk
// are interchangeable, so a boundary component is represented by its tip count.

#include <cstdint>
#include <vector>

namespace sprouts::planar {

struct Region {
  // Tip count of each boundary component of the region.
  std::vector<std::uint32_t> components;

  std::uint64_t tips() const;
  friend bool operator==(const Region&, const Region&) = default;
};

struct SphereState {
  std::vector<Region> regions;

  std::uint64_t total_tips() const;
  friend bool operator==(const SphereState&, const SphereState&) = default;
};

enum class MoveKind { split, merge };

// split: tips `first_tip` < `second_tip` of component `first_component`; the
//   other components of the region go to the daughter region that holds the
//   arc strictly between the two tips when their bit in `assignment` is 0.
//   `assignment` is indexed over the region's components skipping the cut one.
// merge: tip `first_tip` of `first_component` joins tip `second_tip` of
//   `second_component` (first_component < second_component).
struct PlayoutMove {
  MoveKind kind = MoveKind::split;
  std::size_t region = 0;
  std::size_t first_component = 0;
  std::uint32_t first_tip = 0;
  std::size_t second_component = 0;
  std::uint32_t second_tip = 0;
  std::vector<bool> assignment;

  friend bool operator==(const PlayoutMove&, const PlayoutMove&) = default;
};

SphereState initial_sphere_state(const std::vector<std::uint32_t>& tips);

bool is_terminal(const SphereState& s);

// Throws std::length_error when a region has too many components to enumerate
// every split assignment.
std::vector<PlayoutMove> legal_playout_moves(const SphereState& s);

// Throws std::invalid_argument for illegal moves.
SphereState apply_playout_move(const SphereState& s, const PlayoutMove& m);

struct PlayoutResult {
  std::uint64_t move_count = 0;
  SphereState final_state;
};

// Uniformly random legal moves until no move remains; reproducible per seed.
PlayoutResult random_playout(const std::vector<std::uint32_t>& tips, std::uint64_t seed);

// Face count equals the initial tip total, and V - E + F = 2 with
// V = n + x, E = 2x. Throws std::invalid_argument on a non-terminal state.
bool euler_check(const SphereState& final_state, const std::vector<std::uint32_t>& tips,
                 std::uint64_t move_count);

}  // namespace sprouts::planar
