#include "sprouts/solver.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace sprouts {

GrundyTable::Shard& GrundyTable::shard_for(const StateKey& key) {
  return shards_[StateKeyHash{}(key) % kShards];
}

const GrundyTable::Shard& GrundyTable::shard_for(const StateKey& key) const {
  return shards_[StateKeyHash{}(key) % kShards];
}

std::optional<TableEntry> GrundyTable::find(const StateKey& key) const {
  const Shard& shard = shard_for(key);
  std::lock_guard lock(shard.mu);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return std::nullopt;
  return it->second;
}

void GrundyTable::insert(const StateKey& key, const TableEntry& entry) {
  Shard& shard = shard_for(key);
  std::lock_guard lock(shard.mu);
  shard.map.insert_or_assign(key, entry);
}

std::size_t GrundyTable::size() const {
  std::size_t n = 0;
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mu);
    n += shard.map.size();
  }
  return n;
}

void GrundyTable::clear() {
  for (auto& shard : shards_) {
    std::lock_guard lock(shard.mu);
    shard.map.clear();
  }
}

void GrundyTable::for_each(
    const std::function<void(const StateKey&, const TableEntry&)>& fn) const {
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mu);
    for (const auto& [key, entry] : shard.map) fn(key, entry);
  }
}

namespace {

TableEntry solve_canonical(const CircularState& canonical, GrundyTable& table) {
  const StateKey key = encode_key(canonical);
  if (auto hit = table.find(key)) return *hit;

  // Mirrored moves often give isomorphic children; evaluate each pair once.
  std::set<std::pair<StateKey, StateKey>> seen_children;
  std::vector<Nimber> child_nimbers;
  TableEntry entry;
  bool any = false;
  for (const auto& m : legal_moves(canonical)) {
    Split split = apply_move(canonical, m);
    CircularState first = canonicalize(split.first);
    CircularState second = canonicalize(split.second);
    StateKey k1 = encode_key(first);
    StateKey k2 = encode_key(second);
    if (k2 < k1) std::swap(k1, k2);
    if (!seen_children.emplace(k1, k2).second) continue;

    const TableEntry e1 = solve_canonical(first, table);
    const TableEntry e2 = solve_canonical(second, table);
    child_nimbers.push_back(nim_sum(e1.nimber, e2.nimber));
    const std::uint32_t lo = 1 + e1.length.min + e2.length.min;
    const std::uint32_t hi = 1 + e1.length.max + e2.length.max;
    if (!any) {
      entry.length = {lo, hi};
      any = true;
    } else {
      entry.length.min = std::min(entry.length.min, lo);
      entry.length.max = std::max(entry.length.max, hi);
    }
  }
  entry.nimber = mex(child_nimbers);
  table.insert(key, entry);
  return entry;
}

}  // namespace

TableEntry solve(const CircularState& s, GrundyTable& table) {
  return solve_canonical(canonicalize(s), table);
}

Nimber grundy(const CircularState& s, GrundyTable& table) { return solve(s, table).nimber; }

PlayLength play_length_bounds(const CircularState& s, GrundyTable& table) {
  return solve(s, table).length;
}

Nimber grundy(const GameSum& g, GrundyTable& table) {
  Nimber acc = 0;
  for (const auto& s : g.components) acc = nim_sum(acc, grundy(s, table));
  return acc;
}

PlayLength play_length_bounds(const GameSum& g, GrundyTable& table) {
  PlayLength total;
  for (const auto& s : g.components) {
    const PlayLength l = play_length_bounds(s, table);
    total.min += l.min;
    total.max += l.max;
  }
  return total;
}

std::optional<BestMove> best_move(const GameSum& g, GrundyTable& table) {
  std::vector<Nimber> nimbers;
  nimbers.reserve(g.components.size());
  for (const auto& s : g.components) nimbers.push_back(grundy(s, table));
  const Nimber total = sum_nimber(nimbers);

  std::optional<SumMove> first_legal;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const CircularState& s = g.components[c];
    // A component move wins when it brings that component to total ^ own.
    // Unlike Nim the target may exceed the component's current nimber.
    const Nimber target = nim_sum(total, nimbers[c]);
    const bool may_win = total != 0;
    for (const auto& m : legal_moves(s)) {
      if (!first_legal) first_legal = SumMove{c, m};
      if (!may_win) break;
      const Split split = apply_move(s, m);
      if (nim_sum(grundy(split.first, table), grundy(split.second, table)) == target) {
        return BestMove{{c, m}, true};
      }
    }
  }
  if (!first_legal) return std::nullopt;
  return BestMove{*first_legal, false};
}

}  // namespace sprouts
