#pragma once

// Text notation shared by the CLI and the HTTP API:
//
//   position := term ('+' term)*  |  'BS2[' int ',' int ']'
//   term     := 'CS[' int (',' int)* ']'
//
// Whitespace is ignored everywhere. A BS2 opening must stand alone.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sprouts/circular.hpp"

namespace sprouts {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t column);
  // 1-based column in the input where the problem was found.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

struct Bs2Spec {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend bool operator==(const Bs2Spec&, const Bs2Spec&) = default;
};

using ParsedPosition = std::variant<GameSum, Bs2Spec>;

ParsedPosition parse_position(std::string_view text);

std::string to_notation(const CircularState& s);
std::string to_notation(const GameSum& g);
std::string to_notation(const Bs2Spec& b);

// "(i,j,a,b)" with 1-based spot numbers.
std::string to_string(const MoveDescriptor& m);

}  // namespace sprouts
