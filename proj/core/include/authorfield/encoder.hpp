// Maps plain text onto the twelve-symbol code alphabet used by the author and
// layout templates. Every emitted symbol keeps the byte range of the source
// text it came from, so matches on the code string can be decoded back into
// source slices.
//
//   N  all-uppercase word           p  period
//   n  capitalized word             ,  comma
//   I  single uppercase letter      ;  semicolon
//   w  word starting lowercase      :  colon
//   a  adparticle ("of", "the", ..) &  conjunction "and"
//   L  line break                   o  any other non-space character
//
// A word is a run of letters; hyphens (and apostrophes, unless disabled) join
// letters into a single word. Spaces separate words and emit nothing. The
// start and end of the text encode as line breaks.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "authorfield/lexicon.hpp"

namespace authorfield {

enum class Symbol : char {
  kNameUpper = 'N',
  kName = 'n',
  kInitial = 'I',
  kWord = 'w',
  kPeriod = 'p',
  kComma = ',',
  kSemicolon = ';',
  kColon = ':',
  kAnd = '&',
  kLine = 'L',
  kAdparticle = 'a',
  kOther = 'o',
};

inline constexpr std::string_view kAlphabet = "NnIwp,;:&Lao";

constexpr char to_char(Symbol s) { return static_cast<char>(s); }

constexpr bool is_symbol(char c) {
  return kAlphabet.find(c) != std::string_view::npos;
}

// Half-open byte range [start, end) into the source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind { kWord, kInitial, kPunctuation, kLineBreak, kOther };

// One source unit. `text` views the caller's buffer and is valid only while
// that buffer is.
struct Token {
  TokenKind kind = TokenKind::kOther;
  std::string_view text;
  Span span;
  Symbol code = Symbol::kOther;
  // Start of the word that decides the classification; differs from
  // span.start once leading personal particles have been annexed.
  std::size_t head_start = 0;
  // Reclassified as lowercase by the prefix lexicon.
  bool lowered = false;
};

struct EncoderConfig {
  WordSet adparticles;
  WordSet personal_particles;
  WordSet prefixes;
  bool apostrophe_is_letter = true;

  // Shipped lexicons, apostrophes as letters.
  static EncoderConfig defaults();
  static EncoderConfig from_lexicons(const LexiconSet& lexicons,
                                     bool apostrophe_is_letter = true);
};

// Classifies one word (letters only, hyphens and apostrophes inside allowed).
// In priority order: "and" -> '&', adparticle -> 'a', single uppercase letter
// -> 'I', all uppercase -> 'N', uppercase first letter -> 'n', otherwise 'w'.
// Adparticle and "and" lookups ignore case. Throws std::invalid_argument for an
// empty word.
Symbol classify_word(std::string_view word, const EncoderConfig& config);

// As classify_word, but with the first letter treated as lowercase; the result
// is '&', 'a' or 'w'.
Symbol classify_lowered_word(std::string_view word,
                             const EncoderConfig& config);

// Splits text into tokens and classifies each one on its own. No particle
// annexation or prefix lowercasing has happened yet; boundary line breaks are
// not included.
std::vector<Token> tokenize(std::string_view text,
                            const EncoderConfig& config);

// Merges every maximal run of personal particles that is directly followed by
// a word into that word ("van", "Gogh" -> "van Gogh"). The merged token is
// classified by the following word.
std::vector<Token> annex_personal_particles(std::vector<Token> tokens,
                                            const EncoderConfig& config);

// Reclassifies word tokens whose (head) word starts with a prefix lexicon entry
// as if they began with a lowercase letter. Spans and text are untouched.
std::vector<Token> apply_prefix_lowercasing(std::vector<Token> tokens,
                                            const EncoderConfig& config);

// The encoded text: one symbol per token plus a byte span per symbol. The
// source is shared, so copies are cheap and safe to pass between threads.
class CodeString {
 public:
  CodeString(std::shared_ptr<const std::string> source, std::string codes,
             std::vector<Span> spans);

  const std::string& codes() const { return codes_; }
  const std::vector<Span>& spans() const { return spans_; }
  const std::string& source() const { return *source_; }
  std::size_t size() const { return codes_.size(); }
  char operator[](std::size_t i) const { return codes_[i]; }

  std::string_view slice(std::size_t i) const;
  // Source text covered by symbols [first, last).
  std::string_view slice(std::size_t first, std::size_t last) const;
  Span source_span(std::size_t first, std::size_t last) const;

  // Same source and spans, different symbols. `codes` must have equal length.
  CodeString with_codes(std::string codes) const;

 private:
  std::shared_ptr<const std::string> source_;
  std::string codes_;
  std::vector<Span> spans_;
};

struct Encoding {
  CodeString code;
  // Final tokens, parallel to the non-boundary symbols of `code`. Token::text
  // views code.source().
  std::vector<Token> tokens;
  // Number of leading boundary symbols in `code` (0 or 1) before tokens[0].
  std::size_t leading_boundary = 0;
  bool invalid_utf8 = false;
};

// Full pipeline: tokenize, annex particles, prefix lowercasing, then emit one
// symbol per token with boundary line breaks added.
Encoding encode_detailed(std::string_view text, const EncoderConfig& config);
CodeString encode(std::string_view text, const EncoderConfig& config);

}  // namespace authorfield
