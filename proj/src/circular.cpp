#include "sprouts/circular.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace sprouts {

CircularState::CircularState(std::vector<TipCount> tips) : tips_(std::move(tips)) {
  if (tips_.size() < kMinSpots) {
    throw std::invalid_argument("a circular position needs at least 3 spots");
  }
  if (tips_.size() > kMaxSpots) {
    throw std::invalid_argument("a circular position supports at most " +
                                std::to_string(kMaxSpots) + " spots");
  }
  for (TipCount t : tips_) {
    if (t > kMaxTipsPerSpot) {
      throw std::invalid_argument("a spot supports at most " +
                                  std::to_string(kMaxTipsPerSpot) + " open tips");
    }
  }
}

TipCount CircularState::total_tips() const noexcept {
  return std::accumulate(tips_.begin(), tips_.end(), TipCount{0});
}

std::size_t cyclic_distance(std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

CircularState rotate(const CircularState& s, std::size_t k) {
  std::vector<TipCount> t(s.tips().begin(), s.tips().end());
  std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k % t.size()), t.end());
  return CircularState(std::move(t));
}

CircularState reverse(const CircularState& s) {
  std::vector<TipCount> t(s.tips().rbegin(), s.tips().rend());
  return CircularState(std::move(t));
}

namespace {

// Reads the dihedral image starting at `start` walking in direction `dir`.
struct Walk {
  std::span<const TipCount> tips;
  std::size_t start;
  bool backwards;

  TipCount at(std::size_t k) const {
    const std::size_t n = tips.size();
    return backwards ? tips[(start + n - k % n) % n] : tips[(start + k) % n];
  }
};

bool less_than(const Walk& x, const Walk& y) {
  const std::size_t n = x.tips.size();
  for (std::size_t k = 0; k < n; ++k) {
    const TipCount a = x.at(k);
    const TipCount b = y.at(k);
    if (a != b) return a < b;
  }
  return false;
}

}  // namespace

CircularState canonicalize(const CircularState& s) {
  const std::size_t n = s.size();
  Walk best{s.tips(), 0, false};
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      Walk w{s.tips(), start, dir == 1};
      if (less_than(w, best)) best = w;
    }
  }
  std::vector<TipCount> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = best.at(k);
  return CircularState(std::move(out));
}

std::optional<std::string> illegal_reason(const CircularState& s, const MoveDescriptor& m) {
  const std::size_t n = s.size();
  if (m.i >= n || m.j >= n) return "spot index out of range";
  if (m.i == m.j) return "joining a spot to itself would create a 2-cycle (girth < 4)";
  if (m.i > m.j) return "spot indices must be given in increasing order";
  if (cyclic_distance(n, m.i, m.j) < 2) {
    return "joining adjacent spots would create a triangle (girth < 4)";
  }
  if (s[m.i] == 0) return "spot " + std::to_string(m.i + 1) + " has no open tip";
  if (s[m.j] == 0) return "spot " + std::to_string(m.j + 1) + " has no open tip";
  if (m.a >= s[m.i]) {
    return "split count for spot " + std::to_string(m.i + 1) + " must be below " +
           std::to_string(s[m.i]);
  }
  if (m.b >= s[m.j]) {
    return "split count for spot " + std::to_string(m.j + 1) + " must be below " +
           std::to_string(s[m.j]);
  }
  return std::nullopt;
}

std::vector<MoveDescriptor> legal_moves(const CircularState& s) {
  std::vector<MoveDescriptor> moves;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (s[j] == 0 || cyclic_distance(n, i, j) < 2) continue;
      for (TipCount a = 0; a < s[i]; ++a) {
        for (TipCount b = 0; b < s[j]; ++b) moves.push_back({i, j, a, b});
      }
    }
  }
  return moves;
}

bool is_terminal(const CircularState& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (s[j] != 0 && cyclic_distance(n, i, j) >= 2) return false;
    }
  }
  return true;
}

Split apply_move(const CircularState& s, const MoveDescriptor& m) {
  if (auto why = illegal_reason(s, m)) throw std::invalid_argument("illegal move: " + *why);
  const std::size_t n = s.size();

  // Side one walks i -> j forward, then back along the new curve via the crossbar.
  std::vector<TipCount> first;
  first.reserve(m.j - m.i + 2);
  first.push_back(m.a);
  for (std::size_t k = m.i + 1; k < m.j; ++k) first.push_back(s[k]);
  first.push_back(m.b);
  first.push_back(1);

  // Side two walks j -> i forward (wrapping), then the crossbar.
  std::vector<TipCount> second;
  second.reserve(n - (m.j - m.i) + 2);
  second.push_back(s[m.j] - 1 - m.b);
  for (std::size_t k = m.j + 1; k < n; ++k) second.push_back(s[k]);
  for (std::size_t k = 0; k < m.i; ++k) second.push_back(s[k]);
  second.push_back(s[m.i] - 1 - m.a);
  second.push_back(1);

  return {CircularState(std::move(first)), CircularState(std::move(second))};
}

std::size_t StateKeyHash::operator()(const StateKey& k) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : k.words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

StateKey encode_key(const CircularState& s) {
  std::array<std::uint8_t, 32> bytes{};
  bytes[0] = static_cast<std::uint8_t>(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) bytes[k + 1] = static_cast<std::uint8_t>(s[k]);
  StateKey key;
  std::memcpy(key.words.data(), bytes.data(), bytes.size());
  return key;
}

CircularState decode_key(const StateKey& k) {
  std::array<std::uint8_t, 32> bytes{};
  std::memcpy(bytes.data(), k.words.data(), bytes.size());
  std::vector<TipCount> tips(bytes[0]);
  for (std::size_t i = 0; i < tips.size(); ++i) tips[i] = bytes[i + 1];
  return CircularState(std::move(tips));
}

std::vector<SumMove> legal_moves(const GameSum& g) {
  std::vector<SumMove> moves;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    for (const auto& m : legal_moves(g.components[c])) moves.push_back({c, m});
  }
  return moves;
}

bool is_terminal(const GameSum& g) {
  return std::all_of(g.components.begin(), g.components.end(),
                     [](const CircularState& s) { return is_terminal(s); });
}

GameSum apply_move(const GameSum& g, const SumMove& m) {
  if (m.component >= g.components.size()) {
    throw std::invalid_argument("illegal move: component index out of range");
  }
  auto [first, second] = apply_move(g.components[m.component], m.move);
  GameSum next;
  next.components.reserve(g.components.size() + 1);
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    if (c == m.component) {
      next.components.push_back(std::move(first));
      next.components.push_back(std::move(second));
    } else {
      next.components.push_back(g.components[c]);
    }
  }
  return next;
}

std::vector<CircularState> canonical_components(const GameSum& g) {
  std::vector<CircularState> out;
  out.reserve(g.components.size());
  for (const auto& s : g.components) out.push_back(canonicalize(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sprouts
