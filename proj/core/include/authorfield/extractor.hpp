// End-to-end author field extraction: encode the text, mask title fragments
// with the scape templates, match author blocks with each template variant,
// and parse the winning author spans into structured names.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "authorfield/encoder.hpp"
#include "authorfield/lexicon.hpp"
#include "authorfield/templates.hpp"

namespace authorfield {

struct AuthorName {
  // Capitalized words before the surname. All-uppercase words are given
  // normalized ("ISAAC" -> "Isaac"); `raw` keeps the source spelling.
  std::vector<std::string> given;
  // One letter per initial, in source order.
  std::vector<std::string> initials;
  // Last name word, with any annexed particles ("van Gogh").
  std::string surname;
  std::string raw;
  Span span;
  // Template alternative that matched, e.g. "lower:nIn".
  std::string rule_id;
  bool all_caps = false;
  bool has_particle = false;

  friend bool operator==(const AuthorName&, const AuthorName&) = default;
};

enum class VariantPolicy { kLowerThenUpper, kUpperThenLower, kBestOfBoth };

struct ExtractConfig {
  LexiconSet lexicons = LexiconSet::defaults();
  std::size_t max_gap_lines = kDefaultMaxGapLines;
  std::size_t max_blocks = kDefaultMaxBlocks;
  VariantPolicy variant_policy = VariantPolicy::kBestOfBoth;
  bool apostrophe_is_letter = true;
};

// Authors [first_author, last_author) of the result came from one block.
struct BlockInfo {
  std::size_t first_author = 0;
  std::size_t last_author = 0;
  CodeMatch code_span;
  Span source_span;
  // Separator symbols used between this block's authors, e.g. ",&".
  std::string separators;
};

struct ExtractionResult {
  explicit ExtractionResult(CodeString code) : encoded(std::move(code)) {}

  std::vector<AuthorName> authors;
  std::vector<BlockInfo> blocks;
  Variant variant_used = Variant::kLower;
  std::vector<CodeMatch> fired_scapes;
  // Code string before and after scape masking.
  CodeString encoded;
  std::string masked_codes;
  // Source spans of words lowercased by the prefix lexicon.
  std::vector<Span> prefix_lowered;
  std::vector<std::string> warnings;
};

// Decodes one author match against the (masked) code string: the last name
// symbol is the surname, earlier name symbols are given names, and every 'I'
// is an initial. Throws std::logic_error if the span does not end on a name.
AuthorName parse_author_span(const CodeMatch& match, const CodeString& code);

ExtractionResult extract(std::string_view text, const ExtractConfig& config);

// Extraction with a precomputed encoder configuration; `config.lexicons` and
// `config.apostrophe_is_letter` are ignored. Saves rebuilding word sets when
// many documents share one configuration.
ExtractionResult extract(std::string_view text, const ExtractConfig& config,
                         const EncoderConfig& encoder_config);

}  // namespace authorfield
