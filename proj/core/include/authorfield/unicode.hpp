// UTF-8 helpers shared by the encoder and the lexicon loader.
//
// Character properties come from ICU; everything here operates on UTF-8
// byte strings and reports positions as byte offsets.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace authorfield::unicode {

// A decoded code point and the number of bytes it occupied. Invalid byte
// sequences decode one byte at a time with valid == false.
struct Decoded {
  char32_t code_point = 0;
  std::size_t length = 0;
  bool valid = false;
};

Decoded decode(std::string_view text, std::size_t offset);

void append_utf8(std::string& out, char32_t code_point);

// Letters start words. Combining marks continue a word but never start one.
bool is_letter(char32_t c);
bool is_combining_mark(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);
bool is_horizontal_space(char32_t c);
bool is_line_break(char32_t c);

inline bool is_hyphen(char32_t c) {
  return c == U'-' || c == U'\u2010' || c == U'\u2011';
}

inline bool is_apostrophe(char32_t c) {
  return c == U'\'' || c == U'\u2019';
}

// Full case folding of every code point; invalid bytes are copied through.
std::string fold_case(std::string_view text);

// "NEWTON" -> "Newton", "JEAN-PIERRE" -> "Jean-Pierre", "VAN GOGH" ->
// "Van Gogh": the first letter after a space or hyphen is upper-cased, every
// other letter is lower-cased.
std::string capitalize_words(std::string_view text);

// Number of code points (invalid bytes count one each).
std::size_t length(std::string_view text);

// Byte length of the first `count` code points of `text`.
std::size_t prefix_bytes(std::string_view text, std::size_t count);

}  // namespace authorfield::unicode
