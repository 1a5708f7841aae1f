// A small regular-expression engine over the code alphabet.
//
// Supported syntax: alphabet symbols as literals, '.', bracket classes
// ("[nN]", "[^L]"), groups "(...)" and "(?:...)", alternation '|', and the
// quantifiers '?', '*', '+', "{m}", "{m,}", "{m,n}". Patterns compile to a
// Thompson NFA; matching is anchored at a start position and reports every
// reachable end, so callers choose their own discipline (longest, all ends,
// full match).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace authorfield {

class PatternError : public std::invalid_argument {
 public:
  PatternError(std::string_view pattern, std::size_t position,
               const std::string& message);
};

class Pattern {
 public:
  // Throws PatternError on malformed syntax or symbols outside the alphabet.
  static Pattern compile(std::string_view source);

  // Ends e (sorted, unique) such that codes[start, e) matches.
  std::vector<std::size_t> match_ends(std::string_view codes,
                                      std::size_t start) const;
  std::optional<std::size_t> longest_match(std::string_view codes,
                                           std::size_t start) const;
  bool full_match(std::string_view codes) const;
  // Matches the empty string.
  bool nullable() const;

  const std::string& source() const { return source_; }

 private:
  // Symbol mask: bit i set when kAlphabet[i] is accepted.
  using Mask = std::uint16_t;

  struct State {
    enum class Type : std::uint8_t { kSymbol, kSplit, kEpsilon, kAccept };
    Type type = Type::kEpsilon;
    Mask mask = 0;
    int out = -1;
    int out1 = -1;
  };

  struct Builder;

  template <typename Fn>
  void run(std::string_view codes, std::size_t start, Fn&& on_accept) const;

  std::string source_;
  std::vector<State> states_;
  int start_ = -1;
};

// Replaces every bare `symbol` outside bracket classes with "(?:expansion)".
// Used to inline macros such as the initial, I = Ip{0,1}.
std::string expand_symbol(std::string_view pattern, char symbol,
                          std::string_view expansion);

}  // namespace authorfield
