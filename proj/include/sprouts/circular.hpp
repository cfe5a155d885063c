#pragma once

// Circular sprout positions: spots on a boundary cycle, each with a number of
// open tips pointing into the enclosed disc. Consecutive spots on the cycle
// are joined by an edge, so a legal curve must connect two spots at cyclic
// distance >= 2 to keep the drawing triangle-free.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sprouts {

using TipCount = std::uint32_t;

inline constexpr std::size_t kMinSpots = 3;
// Bounded by the fixed-width table key (one byte per spot plus a length byte).
inline constexpr std::size_t kMaxSpots = 31;
inline constexpr TipCount kMaxTipsPerSpot = 255;

class CircularState {
 public:
  // Throws std::invalid_argument outside [kMinSpots, kMaxSpots] spots or
  // when a spot exceeds kMaxTipsPerSpot.
  explicit CircularState(std::vector<TipCount> tips);
  CircularState(std::initializer_list<TipCount> tips)
      : CircularState(std::vector<TipCount>(tips)) {}

  std::size_t size() const noexcept { return tips_.size(); }
  TipCount operator[](std::size_t i) const { return tips_[i]; }
  std::span<const TipCount> tips() const noexcept { return tips_; }
  TipCount total_tips() const noexcept;

  friend auto operator<=>(const CircularState&, const CircularState&) = default;
  friend bool operator==(const CircularState&, const CircularState&) = default;

 private:
  std::vector<TipCount> tips_;
};

// Join a tip of spot i to a tip of spot j (0-based, i < j). `a` of the
// remaining tips of spot i, and `b` of spot j, end up on the side that
// traverses the arc i -> j in increasing cyclic order.
struct MoveDescriptor {
  std::size_t i = 0;
  std::size_t j = 0;
  TipCount a = 0;
  TipCount b = 0;

  friend auto operator<=>(const MoveDescriptor&, const MoveDescriptor&) = default;
};

// The two independent regions left after a move. Each is a new cycle closed
// by the crossbar, which contributes one tip to each side.
struct Split {
  CircularState first;
  CircularState second;
};

std::size_t cyclic_distance(std::size_t n, std::size_t i, std::size_t j);

CircularState rotate(const CircularState& s, std::size_t k);
CircularState reverse(const CircularState& s);

// Lexicographically least image under the dihedral group of the cycle.
CircularState canonicalize(const CircularState& s);

std::vector<MoveDescriptor> legal_moves(const CircularState& s);
bool is_terminal(const CircularState& s);

// Human-readable reason a move is illegal, or nullopt when it is legal.
std::optional<std::string> illegal_reason(const CircularState& s, const MoveDescriptor& m);

// Throws std::invalid_argument for illegal moves.
Split apply_move(const CircularState& s, const MoveDescriptor& m);

// Fixed-width packing of a state: byte 0 holds the spot count, bytes 1..n the
// tip counts. Callers are expected to pass canonical states.
struct StateKey {
  std::array<std::uint64_t, 4> words{};

  friend bool operator==(const StateKey&, const StateKey&) = default;
  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept;
};

StateKey encode_key(const CircularState& s);
CircularState decode_key(const StateKey& k);

// A disjunctive sum of circular games. Order is kept so that component
// indices stay stable across a played history.
struct GameSum {
  std::vector<CircularState> components;

  friend bool operator==(const GameSum&, const GameSum&) = default;
};

struct SumMove {
  std::size_t component = 0;
  MoveDescriptor move;

  friend auto operator<=>(const SumMove&, const SumMove&) = default;
};

std::vector<SumMove> legal_moves(const GameSum& g);
bool is_terminal(const GameSum& g);

// Replaces the moved component by its two children, in place of it.
GameSum apply_move(const GameSum& g, const SumMove& m);

// Sorted canonical components; equal iff the sums are isomorphic.
std::vector<CircularState> canonical_components(const GameSum& g);

}  // namespace sprouts
