#pragma once

#include <filesystem>
#include <stdexcept>

#include "sprouts/solver.hpp"

namespace sprouts {

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plain-text table dump. The first line is a version header; every other line
// is "t1,t2,...,tn nimber min_length max_length" for a canonical state.
inline constexpr const char* kCacheHeader = "sprouts-grundy-cache v1";

// Returns the number of entries loaded; a missing file loads nothing.
// Throws CacheFormatError on a bad header or malformed line.
std::size_t load_table(const std::filesystem::path& path, GrundyTable& table);

// Writes entries sorted by state so the file is byte-stable.
void save_table(const std::filesystem::path& path, const GrundyTable& table);

}  // namespace sprouts
