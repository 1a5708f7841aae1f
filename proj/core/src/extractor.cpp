#include "authorfield/extractor.hpp"

#include <stdexcept>
#include <utility>

#include "authorfield/unicode.hpp"

namespace authorfield {

namespace {

bool is_name_symbol(char c) {
  return c == to_char(Symbol::kName) || c == to_char(Symbol::kNameUpper);
}

// A name span of the source that contains a space was built by particle
// annexation; words never contain spaces otherwise.
bool has_space(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const auto d = unicode::decode(s, i);
    if (d.valid && unicode::is_horizontal_space(d.code_point)) return true;
    i += d.length;
  }
  return false;
}

std::string name_form(std::string_view word, char code) {
  return code == to_char(Symbol::kNameUpper) ? unicode::capitalize_words(word)
                                             : std::string(word);
}

struct Candidate {
  Variant variant;
  std::vector<BlockMatch> blocks;

  std::size_t author_count() const {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.author_count();
    return total;
  }
};

Candidate run_variant(const CodeString& masked, Variant variant,
                      const ExtractConfig& config) {
  return Candidate{variant,
                   match_multi_block(masked, PatternVariant::get(variant),
                                     config.max_gap_lines, config.max_blocks)};
}

Candidate choose(const CodeString& masked, const ExtractConfig& config) {
  switch (config.variant_policy) {
    case VariantPolicy::kLowerThenUpper: {
      Candidate first = run_variant(masked, Variant::kLower, config);
      if (first.author_count() > 0) return first;
      Candidate second = run_variant(masked, Variant::kUpper, config);
      return second.author_count() > 0 ? second : first;
    }
    case VariantPolicy::kUpperThenLower: {
      Candidate first = run_variant(masked, Variant::kUpper, config);
      if (first.author_count() > 0) return first;
      Candidate second = run_variant(masked, Variant::kLower, config);
      return second.author_count() > 0 ? second : first;
    }
    case VariantPolicy::kBestOfBoth:
      break;
  }
  Candidate lower = run_variant(masked, Variant::kLower, config);
  Candidate upper = run_variant(masked, Variant::kUpper, config);
  return upper.author_count() > lower.author_count() ? upper : lower;
}

// Lines made only of name symbols, initials and periods with more than three
// name words fall outside every template (four-word names, missing
// separators); report them when none of their symbols was extracted.
void warn_unmatched_name_lines(const CodeString& code,
                               const std::vector<bool>& covered,
                               std::vector<std::string>& warnings) {
  const std::string& codes = code.codes();
  // 1-based source line; the zero-width boundary breaks do not count.
  std::size_t line_number = 1;
  std::size_t i = 0;
  while (i < codes.size()) {
    if (codes[i] == to_char(Symbol::kLine)) {
      if (!code.spans()[i].empty()) ++line_number;
      ++i;
      continue;
    }
    std::size_t names = 0;
    bool name_like = true;
    bool touched = false;
    for (; i < codes.size() && codes[i] != to_char(Symbol::kLine); ++i) {
      const char c = codes[i];
      if (is_name_symbol(c)) {
        ++names;
      } else if (c != to_char(Symbol::kInitial) &&
                 c != to_char(Symbol::kPeriod)) {
        name_like = false;
      }
      touched = touched || covered[i];
    }
    if (name_like && names > 3 && !touched) {
      warnings.push_back("line " + std::to_string(line_number) +
                         " looks like a name list but matches no author "
                         "template");
    }
  }
}

}  // namespace

AuthorName parse_author_span(const CodeMatch& match, const CodeString& code) {
  if (match.start >= match.end || match.end > code.size() ||
      !is_name_symbol(code[match.end - 1])) {
    throw std::logic_error("parse_author_span: span does not end on a name");
  }
  AuthorName name;
  name.span = code.source_span(match.start, match.end);
  name.raw = std::string(code.slice(match.start, match.end));
  name.rule_id = match.rule_id;
  for (std::size_t i = match.start; i < match.end; ++i) {
    const char c = code[i];
    const std::string_view text = code.slice(i);
    if (c == to_char(Symbol::kInitial)) {
      name.initials.emplace_back(text);
    } else if (is_name_symbol(c)) {
      name.all_caps = name.all_caps || c == to_char(Symbol::kNameUpper);
      name.has_particle = name.has_particle || has_space(text);
      if (i + 1 == match.end) {
        name.surname = name_form(text, c);
      } else {
        name.given.push_back(name_form(text, c));
      }
    }
  }
  return name;
}

ExtractionResult extract(std::string_view text, const ExtractConfig& config) {
  return extract(text, config,
                 EncoderConfig::from_lexicons(config.lexicons,
                                              config.apostrophe_is_letter));
}

ExtractionResult extract(std::string_view text, const ExtractConfig& config,
                         const EncoderConfig& encoder_config) {
  Encoding encoding = encode_detailed(text, encoder_config);
  MaskedCode masked = apply_scape_masks(encoding.code);
  Candidate chosen = choose(masked.code, config);

  ExtractionResult result(encoding.code);
  result.variant_used = chosen.variant;
  result.fired_scapes = std::move(masked.fired);
  result.masked_codes = masked.code.codes();
  for (const Token& t : encoding.tokens) {
    if (t.lowered) result.prefix_lowered.push_back(t.span);
  }
  if (encoding.invalid_utf8) {
    result.warnings.emplace_back(
        "input is not valid UTF-8; invalid bytes encoded as 'o'");
  }

  std::vector<bool> covered(masked.code.size(), false);
  for (const BlockMatch& block : chosen.blocks) {
    BlockInfo info;
    info.first_author = result.authors.size();
    info.code_span = block.block_span;
    for (const CodeMatch& author : block.authors) {
      result.authors.push_back(parse_author_span(author, masked.code));
      for (std::size_t i = author.start; i < author.end; ++i) covered[i] = true;
    }
    for (const CodeMatch& sep : block.separators) {
      info.separators += masked.code.codes().substr(sep.start,
                                                    sep.end - sep.start);
    }
    info.last_author = result.authors.size();
    info.source_span = masked.code.source_span(block.authors.front().start,
                                               block.authors.back().end);
    result.blocks.push_back(std::move(info));
  }
  warn_unmatched_name_lines(masked.code, covered, result.warnings);
  return result;
}

}  // namespace authorfield
