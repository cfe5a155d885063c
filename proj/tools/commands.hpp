#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sprouts/grundy.hpp"
#include "sprouts/solver.hpp"

namespace sprouts::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct SweepCell {
  std::int64_t p = 0;
  std::int64_t q = 0;
  Nimber formula = 0;
  Nimber oracle = 0;
  bool match = false;
};

struct SweepReport {
  std::int64_t max_q = 0;
  std::vector<SweepCell> cells;  // ordered by (q, p)
  bool pass = false;
  double seconds = 0.0;
};

// Brute-force nimbers of CS[p,1,q,1] against the closed form for
// 0 <= p <= q <= max_q. Cells may be solved on several threads sharing one
// table; the report order does not depend on scheduling.
SweepReport verify_closed_form(std::int64_t max_q, unsigned threads, GrundyTable& table);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sprouts::cli
