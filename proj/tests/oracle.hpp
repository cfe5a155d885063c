#pragma once

// Test-only brute force, kept independent of the engine: moves are derived
// from the clockwise order of tips around each spot, sums are evaluated as
// joint games (no XOR), and states are memoised only by their raw sequences
// (no dihedral canonical form). Fine for tiny positions only.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Cycle = std::vector<int>;
using Multiset = std::vector<Cycle>;  // kept sorted, terminal cycles dropped

inline int steps_forward(int n, int from, int to) { return ((to - from) % n + n) % n; }

inline bool joinable(int n, int i, int j) {
  const int fwd = steps_forward(n, i, j);
  return fwd >= 2 && n - fwd >= 2;
}

// Tips around spot s are numbered clockwise from the boundary edge shared with
// spot s-1. Joining tip u of spot i to tip v of spot j leaves tips u+1.. of
// spot i and tips ..v-1 of spot j on the side that walks i -> j.
inline std::vector<std::pair<Cycle, Cycle>> children(const Cycle& c) {
  std::vector<std::pair<Cycle, Cycle>> out;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i >= j || !joinable(n, i, j)) continue;
      for (int u = 0; u < c[i]; ++u) {
        for (int v = 0; v < c[j]; ++v) {
          Cycle side_a{c[i] - 1 - u};
          for (int s = (i + 1) % n; s != j; s = (s + 1) % n) side_a.push_back(c[s]);
          side_a.push_back(v);
          side_a.push_back(1);
          Cycle side_b{c[j] - 1 - v};
          for (int s = (j + 1) % n; s != i; s = (s + 1) % n) side_b.push_back(c[s]);
          side_b.push_back(u);
          side_b.push_back(1);
          out.emplace_back(std::move(side_a), std::move(side_b));
        }
      }
    }
  }
  return out;
}

inline bool terminal(const Cycle& c) { return children(c).empty(); }

inline Multiset normalise(Multiset m) {
  m.erase(std::remove_if(m.begin(), m.end(), terminal), m.end());
  std::sort(m.begin(), m.end());
  return m;
}

inline std::vector<Multiset> sum_children(const Multiset& m) {
  std::vector<Multiset> out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    for (auto& [a, b] : children(m[k])) {
      Multiset next;
      for (std::size_t o = 0; o < m.size(); ++o) {
        if (o != k) next.push_back(m[o]);
      }
      next.push_back(a);
      next.push_back(b);
      out.push_back(normalise(std::move(next)));
    }
  }
  return out;
}

// Grundy value of the whole sum, by mex over joint moves.
inline int joint_nimber(const Multiset& start) {
  static std::map<Multiset, int> memo;
  const Multiset m = normalise(start);
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::set<int> seen;
  for (const auto& child : sum_children(m)) seen.insert(joint_nimber(child));
  int g = 0;
  while (seen.count(g)) ++g;
  memo[m] = g;
  return g;
}

// Every possible length of a complete playout of the sum.
inline std::set<int> playout_lengths(const Multiset& start) {
  static std::map<Multiset, std::set<int>> memo;
  const Multiset m = normalise(start);
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::set<int> lengths;
  for (const auto& child : sum_children(m)) {
    for (int l : playout_lengths(child)) lengths.insert(l + 1);
  }
  if (lengths.empty()) lengths.insert(0);
  memo[m] = lengths;
  return lengths;
}

}  // namespace oracle
