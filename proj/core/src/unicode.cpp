#include "authorfield/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace authorfield::unicode {

Decoded decode(std::string_view text, std::size_t offset) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto size = static_cast<int32_t>(text.size());
  auto i = static_cast<int32_t>(offset);
  UChar32 c = 0;
  U8_NEXT(bytes, i, size, c);
  if (c < 0) {
    // U8_NEXT may swallow a truncated sequence; resynchronize byte by byte.
    return Decoded{static_cast<char32_t>(bytes[offset]), 1, false};
  }
  return Decoded{static_cast<char32_t>(c), static_cast<std::size_t>(i) - offset,
                 true};
}

void append_utf8(std::string& out, char32_t code_point) {
  uint8_t buffer[U8_MAX_LENGTH];
  int32_t length = 0;
  UBool error = false;
  U8_APPEND(buffer, length, U8_MAX_LENGTH, static_cast<UChar32>(code_point),
            error);
  if (error) return;
  out.append(reinterpret_cast<const char*>(buffer),
             static_cast<std::size_t>(length));
}

bool is_letter(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }

bool is_combining_mark(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_M_MASK) != 0;
}

bool is_upper(char32_t c) {
  return u_isUUppercase(static_cast<UChar32>(c)) ||
         u_istitle(static_cast<UChar32>(c));
}

bool is_lower(char32_t c) { return u_isULowercase(static_cast<UChar32>(c)); }

bool is_horizontal_space(char32_t c) {
  if (is_line_break(c)) return false;
  return c == U'\t' || u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_line_break(char32_t c) {
  switch (c) {
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case U'\u0085':
    case U'\u2028':
    case U'\u2029':
      return true;
    default:
      return false;
  }
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const Decoded d = decode(text, i);
    if (d.valid) {
      append_utf8(out, static_cast<char32_t>(u_foldCase(
                           static_cast<UChar32>(d.code_point),
                           U_FOLD_CASE_DEFAULT)));
    } else {
      out.push_back(text[i]);
    }
    i += d.length;
  }
  return out;
}

std::string capitalize_words(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool at_start = true;
  for (std::size_t i = 0; i < text.size();) {
    const Decoded d = decode(text, i);
    if (!d.valid) {
      out.push_back(text[i]);
    } else if (is_letter(d.code_point)) {
      const auto c = static_cast<UChar32>(d.code_point);
      append_utf8(out, static_cast<char32_t>(at_start ? u_totitle(c)
                                                      : u_tolower(c)));
      at_start = false;
    } else {
      append_utf8(out, d.code_point);
      if (is_hyphen(d.code_point) || is_horizontal_space(d.code_point)) {
        at_start = true;
      }
    }
    i += d.length;
  }
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size(); i += decode(text, i).length) {
    ++count;
  }
  return count;
}

std::size_t prefix_bytes(std::string_view text, std::size_t count) {
  std::size_t i = 0;
  for (; i < text.size() && count > 0; --count) i += decode(text, i).length;
  return i;
}

}  // namespace authorfield::unicode
