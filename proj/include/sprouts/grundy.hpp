#pragma once

#include <cstdint>
#include <span>

namespace sprouts {

// Grundy value of an impartial position under normal play.
using Nimber = std::uint64_t;

// Least non-negative integer absent from `values`. Duplicates are fine.
Nimber mex(std::span<const Nimber> values);

constexpr Nimber nim_sum(Nimber a, Nimber b) noexcept { return a ^ b; }

// Nimber of a disjunctive sum: XOR of the component nimbers, 0 when empty.
Nimber sum_nimber(std::span<const Nimber> components);

}  // namespace sprouts
