#include "sprouts/table_cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sprouts {

std::size_t load_table(const std::filesystem::path& path, GrundyTable& table) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) {
    throw CacheFormatError("unrecognised cache header in " + path.string());
  }
  std::size_t loaded = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tips_field;
    TableEntry entry;
    if (!(fields >> tips_field >> entry.nimber >> entry.length.min >> entry.length.max)) {
      throw CacheFormatError("malformed cache line " + std::to_string(lineno));
    }
    std::vector<TipCount> tips;
    std::istringstream tip_stream(tips_field);
    std::string tok;
    try {
      while (std::getline(tip_stream, tok, ',')) tips.push_back(static_cast<TipCount>(std::stoul(tok)));
      const CircularState s(std::move(tips));
      if (canonicalize(s) != s) {
        throw CacheFormatError("non-canonical state on cache line " + std::to_string(lineno));
      }
      table.insert(encode_key(s), entry);
    } catch (const std::invalid_argument&) {
      throw CacheFormatError("malformed state on cache line " + std::to_string(lineno));
    } catch (const std::out_of_range&) {
      throw CacheFormatError("malformed state on cache line " + std::to_string(lineno));
    }
    ++loaded;
  }
  return loaded;
}

void save_table(const std::filesystem::path& path, const GrundyTable& table) {
  std::vector<std::pair<CircularState, TableEntry>> rows;
  table.for_each([&](const StateKey& k, const TableEntry& e) { rows.emplace_back(decode_key(k), e); });
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << kCacheHeader << '\n';
    for (const auto& [s, e] : rows) {
      for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << s[k];
      out << ' ' << e.nimber << ' ' << e.length.min << ' ' << e.length.max << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace sprouts
