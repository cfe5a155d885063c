#include "sprouts/planar.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace sprouts::planar {

std::uint64_t Region::tips() const {
  return std::accumulate(components.begin(), components.end(), std::uint64_t{0});
}

std::uint64_t SphereState::total_tips() const {
  std::uint64_t n = 0;
  for (const auto& r : regions) n += r.tips();
  return n;
}

SphereState initial_sphere_state(const std::vector<std::uint32_t>& tips) {
  SphereState s;
  if (tips.empty()) return s;
  s.regions.push_back(Region{tips});
  return s;
}

bool is_terminal(const SphereState& s) {
  for (const auto& r : s.regions) {
    if (r.tips() >= 2) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kMaxAssignmentBits = 20;

std::vector<bool> bits_of(std::uint64_t mask, std::size_t width) {
  std::vector<bool> out(width);
  for (std::size_t k = 0; k < width; ++k) out[k] = ((mask >> k) & 1U) != 0;
  return out;
}

}  // namespace

std::vector<PlayoutMove> legal_playout_moves(const SphereState& s) {
  std::vector<PlayoutMove> moves;
  for (std::size_t r = 0; r < s.regions.size(); ++r) {
    const auto& comps = s.regions[r].components;
    const std::size_t others = comps.empty() ? 0 : comps.size() - 1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (comps[c] < 2) continue;
      if (others > kMaxAssignmentBits) {
        throw std::length_error("too many boundary components to enumerate split moves");
      }
      for (std::uint32_t u = 0; u < comps[c]; ++u) {
        for (std::uint32_t v = u + 1; v < comps[c]; ++v) {
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others); ++mask) {
            moves.push_back({MoveKind::split, r, c, u, c, v, bits_of(mask, others)});
          }
        }
      }
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (std::size_t d = c + 1; d < comps.size(); ++d) {
        for (std::uint32_t u = 0; u < comps[c]; ++u) {
          for (std::uint32_t v = 0; v < comps[d]; ++v) {
            moves.push_back({MoveKind::merge, r, c, u, d, v, {}});
          }
        }
      }
    }
  }
  return moves;
}

SphereState apply_playout_move(const SphereState& s, const PlayoutMove& m) {
  if (m.region >= s.regions.size()) throw std::invalid_argument("illegal move: no such region");
  const auto& comps = s.regions[m.region].components;
  if (m.first_component >= comps.size() || m.second_component >= comps.size()) {
    throw std::invalid_argument("illegal move: no such boundary component");
  }
  if (m.first_tip >= comps[m.first_component] || m.second_tip >= comps[m.second_component]) {
    throw std::invalid_argument("illegal move: no such tip");
  }

  SphereState next;
  next.regions.reserve(s.regions.size() + 1);
  for (std::size_t r = 0; r < m.region; ++r) next.regions.push_back(s.regions[r]);

  if (m.kind == MoveKind::merge) {
    if (m.first_component >= m.second_component) {
      throw std::invalid_argument("illegal move: merge needs two distinct components in order");
    }
    // Both remnants plus both crossbar tips end up on one walk.
    Region merged;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c == m.first_component) {
        merged.components.push_back(comps[m.first_component] + comps[m.second_component]);
      } else if (c != m.second_component) {
        merged.components.push_back(comps[c]);
      }
    }
    next.regions.push_back(std::move(merged));
  } else {
    if (m.first_component != m.second_component || m.first_tip >= m.second_tip) {
      throw std::invalid_argument("illegal move: split needs two ordered tips on one component");
    }
    if (m.assignment.size() + 1 != comps.size()) {
      throw std::invalid_argument("illegal move: split assignment must cover the other components");
    }
    const std::uint32_t total = comps[m.first_component];
    const std::uint32_t inner = m.second_tip - m.first_tip - 1;
    const std::uint32_t outer = total - 2 - inner;
    Region inside{{inner + 1}};
    Region outside{{outer + 1}};
    std::size_t bit = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c == m.first_component) continue;
      (m.assignment[bit++] ? outside : inside).components.push_back(comps[c]);
    }
    next.regions.push_back(std::move(inside));
    next.regions.push_back(std::move(outside));
  }

  for (std::size_t r = m.region + 1; r < s.regions.size(); ++r) next.regions.push_back(s.regions[r]);
  return next;
}

PlayoutResult random_playout(const std::vector<std::uint32_t>& tips, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlayoutResult result{0, initial_sphere_state(tips)};
  for (;;) {
    auto moves = legal_playout_moves(result.final_state);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    result.final_state = apply_playout_move(result.final_state, moves[pick(rng)]);
    ++result.move_count;
  }
  return result;
}

bool euler_check(const SphereState& final_state, const std::vector<std::uint32_t>& tips,
                 std::uint64_t move_count) {
  if (!is_terminal(final_state)) {
    throw std::invalid_argument("euler_check needs a terminal state");
  }
  const auto n = static_cast<std::int64_t>(tips.size());
  const auto x = static_cast<std::int64_t>(move_count);
  const auto faces = static_cast<std::int64_t>(final_state.regions.size());
  const auto sum = static_cast<std::int64_t>(std::accumulate(tips.begin(), tips.end(), std::uint64_t{0}));
  return faces == sum && (n + x) - 2 * x + faces == 2;
}

}  // namespace sprouts::planar
