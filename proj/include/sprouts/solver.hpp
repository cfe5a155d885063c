#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "sprouts/circular.hpp"
#include "sprouts/grundy.hpp"

namespace sprouts {

struct PlayLength {
  std::uint32_t min = 0;
  std::uint32_t max = 0;

  friend bool operator==(const PlayLength&, const PlayLength&) = default;
};

struct TableEntry {
  Nimber nimber = 0;
  PlayLength length;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

// Memo of solved positions keyed by canonical form. Safe for concurrent use:
// values are a pure function of the key, so racing inserts agree.
class GrundyTable {
 public:
  GrundyTable() = default;
  GrundyTable(const GrundyTable&) = delete;
  GrundyTable& operator=(const GrundyTable&) = delete;

  std::optional<TableEntry> find(const StateKey& key) const;
  void insert(const StateKey& key, const TableEntry& entry);
  std::size_t size() const;
  void clear();

  // Visits every entry; no ordering guarantee.
  void for_each(const std::function<void(const StateKey&, const TableEntry&)>& fn) const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<StateKey, TableEntry, StateKeyHash> map;
  };
  Shard& shard_for(const StateKey& key);
  const Shard& shard_for(const StateKey& key) const;

  std::array<Shard, kShards> shards_;
};

// Full solve of one position: nimber plus shortest and longest playout.
TableEntry solve(const CircularState& s, GrundyTable& table);

Nimber grundy(const CircularState& s, GrundyTable& table);
PlayLength play_length_bounds(const CircularState& s, GrundyTable& table);

Nimber grundy(const GameSum& g, GrundyTable& table);
PlayLength play_length_bounds(const GameSum& g, GrundyTable& table);

struct BestMove {
  SumMove move;
  // False when the sum is already a second-player win and any move loses.
  bool winning = false;
};

// Lexicographically least (component, i, j, a, b) move leaving nimber 0, or
// the least legal move flagged as losing; nullopt on a terminal sum.
std::optional<BestMove> best_move(const GameSum& g, GrundyTable& table);

}  // namespace sprouts
