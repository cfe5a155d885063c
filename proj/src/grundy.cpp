#include "sprouts/grundy.hpp"

#include <vector>

namespace sprouts {

Nimber mex(std::span<const Nimber> values) {
  // The answer is at most values.size(), so larger entries never matter.
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Nimber m = 0;
  while (seen[m]) ++m;
  return m;
}

Nimber sum_nimber(std::span<const Nimber> components) {
  Nimber acc = 0;
  for (Nimber v : components) acc = nim_sum(acc, v);
  return acc;
}

}  // namespace sprouts
