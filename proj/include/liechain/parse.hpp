#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "liechain/errors.hpp"
#include "liechain/group_type.hpp"

namespace liechain {

namespace detail {

// Recursive-descent parser for the group-spec grammar:
//   group := "1" | term (" x " term)*
//   term  := atom ("^" INT)?
//   atom  := ("SU"|"Sp"|"SO") "(" INT ")" | "G2" | "F4" | "E6" | "E7" | "E8" | "T" ("^" INT)?
// Family names are case-insensitive; blanks around tokens are ignored.
class GroupSpecParser {
 public:
  explicit GroupSpecParser(std::string_view text) : text_(text) {}

  GroupType parse() {
    skip_blanks();
    if (peek() == '1') {
      ++pos_;
      skip_blanks();
      if (!at_end()) fail("trailing input after '1'");
      return GroupType::trivial();
    }
    GroupType g = term();
    skip_blanks();
    while (!at_end()) {
      if (!separator()) fail("expected 'x' between terms");
      skip_blanks();
      g = g * term();
      skip_blanks();
    }
    return g;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char upper() const { return static_cast<char>(std::toupper(static_cast<unsigned char>(peek()))); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_blanks() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool separator() {
    if (upper() == 'X') {
      ++pos_;
      return true;
    }
    constexpr std::string_view times = "\xC3\x97";  // U+00D7
    if (text_.substr(pos_, times.size()) == times) {
      pos_ += times.size();
      return true;
    }
    return false;
  }

  int integer() {
    skip_blanks();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 100000) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  int exponent() {
    skip_blanks();
    if (peek() != '^') return 1;
    ++pos_;
    const std::size_t at = pos_;
    const int k = integer();
    if (k < 1) throw ParseError("exponent must be positive", at);
    return k;
  }

  GroupType term() {
    GroupType base = atom();
    return power(base, exponent());
  }

  GroupType atom() {
    skip_blanks();
    const std::size_t start = pos_;
    const char c = upper();
    if (c == 'T') {
      ++pos_;
      return GroupType::torus(exponent());
    }
    if (c == 'S') {
      ++pos_;
      Family family;
      switch (upper()) {
        case 'U': family = Family::SU; break;
        case 'P': family = Family::Sp; break;
        case 'O': family = Family::SO; break;
        default: fail("expected SU, Sp or SO");
      }
      ++pos_;
      skip_blanks();
      if (peek() != '(') fail("expected '('");
      ++pos_;
      const int n = integer();
      skip_blanks();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      try {
        return canonicalize(family, n);
      } catch (const MalformedTypeError& e) {
        throw MalformedTypeError(std::string(e.what()) + " (at position " + std::to_string(start) + ")");
      }
    }
    if (c == 'G' || c == 'F' || c == 'E') {
      ++pos_;
      const char d = peek();
      Family family;
      if (c == 'G' && d == '2') family = Family::G2;
      else if (c == 'F' && d == '4') family = Family::F4;
      else if (c == 'E' && d == '6') family = Family::E6;
      else if (c == 'E' && d == '7') family = Family::E7;
      else if (c == 'E' && d == '8') family = Family::E8;
      else fail("unknown exceptional type");
      ++pos_;
      return canonicalize(family);
    }
    fail("expected a group atom");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a group-spec string into its canonical GroupType.
inline GroupType parse_group(std::string_view text) { return detail::GroupSpecParser(text).parse(); }

}  // namespace liechain
