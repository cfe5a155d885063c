#include "sprouts/notation.hpp"

#include <cctype>
#include <limits>

namespace sprouts {

ParseError::ParseError(std::string message, std::size_t column)
    : std::runtime_error("parse error at column " + std::to_string(column) + ": " + message),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPosition parse() {
    skip_ws();
    if (at_end()) fail("empty position");
    if (peek_word("BS2")) {
      const Bs2Spec spec = parse_bs2();
      skip_ws();
      if (!at_end()) fail("a BS2 opening cannot be combined with other terms");
      return spec;
    }
    GameSum sum;
    sum.components.push_back(parse_cs());
    skip_ws();
    while (!at_end()) {
      expect('+');
      skip_ws();
      if (peek_word("BS2")) fail("a BS2 opening cannot be combined with other terms");
      sum.components.push_back(parse_cs());
      skip_ws();
    }
    return sum;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }

  void expect(char c) {
    skip_ws();
    if (at_end()) fail(std::string("expected '") + c + "' but input ended");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (!peek_word(w)) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a non-negative integer");
    }
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  CircularState parse_cs() {
    const std::size_t start = pos_;
    expect_word("CS");
    expect('[');
    std::vector<TipCount> tips;
    tips.push_back(static_cast<TipCount>(parse_uint()));
    skip_ws();
    while (!at_end() && text_[pos_] == ',') {
      ++pos_;
      tips.push_back(static_cast<TipCount>(parse_uint()));
      skip_ws();
    }
    expect(']');
    try {
      return CircularState(std::move(tips));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start + 1);
    }
  }

  Bs2Spec parse_bs2() {
    expect_word("BS2");
    expect('[');
    Bs2Spec spec;
    spec.p = static_cast<std::int64_t>(parse_uint());
    expect(',');
    spec.q = static_cast<std::int64_t>(parse_uint());
    expect(']');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPosition parse_position(std::string_view text) { return Parser(text).parse(); }

std::string to_notation(const CircularState& s) {
  std::string out = "CS[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  out += ']';
  return out;
}

std::string to_notation(const GameSum& g) {
  std::string out;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    if (c) out += '+';
    out += to_notation(g.components[c]);
  }
  return out;
}

std::string to_notation(const Bs2Spec& b) {
  return "BS2[" + std::to_string(b.p) + "," + std::to_string(b.q) + "]";
}

std::string to_string(const MoveDescriptor& m) {
  return "(" + std::to_string(m.i + 1) + "," + std::to_string(m.j + 1) + "," +
         std::to_string(m.a) + "," + std::to_string(m.b) + ")";
}

}  // namespace sprouts
