#include "authorfield/encoder.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "authorfield/unicode.hpp"

namespace authorfield {

namespace {

bool is_word_joiner(char32_t c, bool apostrophe_is_letter) {
  return unicode::is_hyphen(c) ||
         (apostrophe_is_letter && unicode::is_apostrophe(c));
}

Symbol punctuation_symbol(char32_t c) {
  switch (c) {
    case U'.':
      return Symbol::kPeriod;
    case U',':
      return Symbol::kComma;
    case U';':
      return Symbol::kSemicolon;
    case U':':
      return Symbol::kColon;
    case U'&':
      return Symbol::kAnd;
    default:
      return Symbol::kOther;
  }
}

TokenKind kind_of(Symbol code) {
  switch (code) {
    case Symbol::kInitial:
      return TokenKind::kInitial;
    case Symbol::kLine:
      return TokenKind::kLineBreak;
    case Symbol::kOther:
      return TokenKind::kOther;
    case Symbol::kPeriod:
    case Symbol::kComma:
    case Symbol::kSemicolon:
    case Symbol::kColon:
      return TokenKind::kPunctuation;
    default:
      return TokenKind::kWord;
  }
}

std::string_view head_text(const Token& t) {
  return t.text.substr(t.head_start - t.span.start);
}

Symbol classify_token(const Token& t, const EncoderConfig& config) {
  const std::string_view head = head_text(t);
  return t.lowered ? classify_lowered_word(head, config)
                   : classify_word(head, config);
}

Symbol lookup_symbol(std::string_view folded, const EncoderConfig& config) {
  if (folded == "and") return Symbol::kAnd;
  if (config.adparticles.contains(folded)) return Symbol::kAdparticle;
  return Symbol::kWord;
}

}  // namespace

EncoderConfig EncoderConfig::defaults() {
  return from_lexicons(LexiconSet::defaults());
}

EncoderConfig EncoderConfig::from_lexicons(const LexiconSet& lexicons,
                                           bool apostrophe_is_letter) {
  return EncoderConfig{lexicons.adparticles, lexicons.personal_particles,
                       lexicons.prefixes, apostrophe_is_letter};
}

Symbol classify_word(std::string_view word, const EncoderConfig& config) {
  if (word.empty()) throw std::invalid_argument("classify_word: empty word");
  const std::string folded = unicode::fold_case(word);
  if (const Symbol s = lookup_symbol(folded, config); s != Symbol::kWord) {
    return s;
  }

  std::size_t letters = 0;
  bool first_upper = false;
  bool any_lower = false;
  for (std::size_t i = 0; i < word.size();) {
    const auto d = unicode::decode(word, i);
    i += d.length;
    if (!d.valid || !unicode::is_letter(d.code_point)) continue;
    if (letters == 0) first_upper = unicode::is_upper(d.code_point);
    any_lower = any_lower || unicode::is_lower(d.code_point);
    ++letters;
  }
  if (!first_upper) return Symbol::kWord;
  if (letters == 1) return Symbol::kInitial;
  return any_lower ? Symbol::kName : Symbol::kNameUpper;
}

Symbol classify_lowered_word(std::string_view word,
                             const EncoderConfig& config) {
  if (word.empty()) throw std::invalid_argument("classify_word: empty word");
  return lookup_symbol(unicode::fold_case(word), config);
}

std::vector<Token> tokenize(std::string_view text,
                            const EncoderConfig& config) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t start, std::size_t end, Symbol code) {
    tokens.push_back(Token{kind_of(code), text.substr(start, end - start),
                           Span{start, end}, code, start, false});
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const auto d = unicode::decode(text, i);
    const std::size_t start = i;
    if (!d.valid) {
      emit(start, start + d.length, Symbol::kOther);
      i += d.length;
      continue;
    }
    const char32_t c = d.code_point;
    if (unicode::is_line_break(c)) {
      i += d.length;
      if (c == U'\r' && i < text.size() && text[i] == '\n') ++i;
      emit(start, i, Symbol::kLine);
    } else if (unicode::is_horizontal_space(c)) {
      i += d.length;
    } else if (unicode::is_letter(c)) {
      i += d.length;
      while (i < text.size()) {
        const auto next = unicode::decode(text, i);
        if (!next.valid) break;
        if (unicode::is_letter(next.code_point) ||
            unicode::is_combining_mark(next.code_point)) {
          i += next.length;
          continue;
        }
        // A joiner belongs to the word only when a letter follows it.
        if (is_word_joiner(next.code_point, config.apostrophe_is_letter)) {
          const std::size_t after = i + next.length;
          if (after < text.size()) {
            const auto following = unicode::decode(text, after);
            if (following.valid && unicode::is_letter(following.code_point)) {
              i = after;
              continue;
            }
          }
        }
        break;
      }
      emit(start, i, classify_word(text.substr(start, i - start), config));
    } else {
      i += d.length;
      emit(start, i, punctuation_symbol(c));
    }
  }
  return tokens;
}

std::vector<Token> annex_personal_particles(std::vector<Token> tokens,
                                            const EncoderConfig& config) {
  if (config.personal_particles.empty()) return tokens;
  auto is_particle = [&](const Token& t) {
    return t.kind == TokenKind::kWord && t.head_start == t.span.start &&
           config.personal_particles.contains(unicode::fold_case(t.text));
  };

  std::vector<Token> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_particle(tokens[i])) {
      out.push_back(tokens[i++]);
      continue;
    }
    std::size_t head = i;
    while (head < tokens.size() && is_particle(tokens[head])) ++head;
    if (head == tokens.size() || tokens[head].kind != TokenKind::kWord) {
      // Nothing to attach to; keep the particles as ordinary words.
      for (; i < head; ++i) out.push_back(tokens[i]);
      continue;
    }
    Token merged = tokens[head];
    const Token& first = tokens[i];
    merged.span.start = first.span.start;
    merged.text = std::string_view(
        first.text.data(), merged.span.end - merged.span.start);
    merged.code = classify_token(merged, config);
    merged.kind = kind_of(merged.code);
    out.push_back(merged);
    i = head + 1;
  }
  return out;
}

std::vector<Token> apply_prefix_lowercasing(std::vector<Token> tokens,
                                            const EncoderConfig& config) {
  if (config.prefixes.empty()) return tokens;
  for (Token& t : tokens) {
    if (t.kind != TokenKind::kWord || t.lowered) continue;
    if (!config.prefixes.has_prefix_of(unicode::fold_case(head_text(t)))) {
      continue;
    }
    t.lowered = true;
    t.code = classify_token(t, config);
    t.kind = kind_of(t.code);
  }
  return tokens;
}

CodeString::CodeString(std::shared_ptr<const std::string> source,
                       std::string codes, std::vector<Span> spans)
    : source_(std::move(source)),
      codes_(std::move(codes)),
      spans_(std::move(spans)) {
  if (codes_.size() != spans_.size()) {
    throw std::invalid_argument("CodeString: codes and spans differ in size");
  }
}

std::string_view CodeString::slice(std::size_t i) const {
  return slice(i, i + 1);
}

std::string_view CodeString::slice(std::size_t first, std::size_t last) const {
  const Span span = source_span(first, last);
  return std::string_view(*source_).substr(span.start, span.size());
}

Span CodeString::source_span(std::size_t first, std::size_t last) const {
  assert(first < last && last <= spans_.size());
  return Span{spans_[first].start, spans_[last - 1].end};
}

CodeString CodeString::with_codes(std::string codes) const {
  return CodeString(source_, std::move(codes), spans_);
}

Encoding encode_detailed(std::string_view text, const EncoderConfig& config) {
  auto source = std::make_shared<const std::string>(text);
  const std::string_view owned(*source);

  std::vector<Token> tokens = tokenize(owned, config);
  tokens = annex_personal_particles(std::move(tokens), config);
  tokens = apply_prefix_lowercasing(std::move(tokens), config);

  std::string codes;
  std::vector<Span> spans;
  codes.reserve(tokens.size() + 2);
  spans.reserve(tokens.size() + 2);
  bool invalid_utf8 = false;

  std::size_t leading = 0;
  if (tokens.empty() || tokens.front().code != Symbol::kLine) {
    codes.push_back(to_char(Symbol::kLine));
    spans.push_back(Span{0, 0});
    leading = 1;
  }
  for (const Token& t : tokens) {
    codes.push_back(to_char(t.code));
    spans.push_back(t.span);
    if (t.code == Symbol::kOther && !unicode::decode(t.text, 0).valid) {
      invalid_utf8 = true;
    }
  }
  if (codes.back() != to_char(Symbol::kLine)) {
    codes.push_back(to_char(Symbol::kLine));
    spans.push_back(Span{owned.size(), owned.size()});
  }

  return Encoding{CodeString(std::move(source), std::move(codes),
                             std::move(spans)),
                  std::move(tokens), leading, invalid_utf8};
}

CodeString encode(std::string_view text, const EncoderConfig& config) {
  return encode_detailed(text, config).code;
}

}  // namespace authorfield
