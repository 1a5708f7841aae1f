// Author, layout and scape templates matched against a CodeString.
//
// Author names follow one of two alternative sets: the "lower" set for
// capitalized names and the "upper" set, which additionally admits
// all-uppercase surnames. In both, the initial I stands for "Ip?" (a capital
// letter and an optional period).
//
// A single author block is
//
//     L A ([,;&L]+ A)* (?=L)
//
// i.e. a line break, one or more authors separated by runs of commas,
// semicolons, "and" or line breaks, and a line break that is required but
// not consumed. Blocks may be chained across up to seven intervening lines
// (addresses, affiliations), each line being "L[^L]*".
//
// Scape templates find capitalized words that continue a title or similar
// non-name text and mask them (rewrite them to 'w') before author matching.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "authorfield/encoder.hpp"
#include "authorfield/pattern.hpp"

namespace authorfield {

enum class Variant { kLower, kUpper };

std::string_view to_string(Variant v);

enum class MatchKind { kAuthor, kBlock, kScapeMask };

// Symbol-index range [start, end) into a CodeString.
struct CodeMatch {
  std::size_t start = 0;
  std::size_t end = 0;
  MatchKind kind = MatchKind::kAuthor;
  // Author matches: "lower:nIn" style alternative id. Scape matches: "S1".."S4"
  // (span covers the whole scape match). Blocks: "block".
  std::string rule_id;

  friend bool operator==(const CodeMatch&, const CodeMatch&) = default;
};

struct BlockMatch {
  CodeMatch block_span;
  std::vector<CodeMatch> authors;
  // Separator runs between consecutive authors, as symbol-index ranges.
  std::vector<CodeMatch> separators;

  std::size_t author_count() const { return authors.size(); }
};

// One compiled author alternative set.
class PatternVariant {
 public:
  struct Alternative {
    std::string id;      // "lower:nIn"
    std::string source;  // "nIn", before expanding I
    Pattern pattern;
  };

  static const PatternVariant& lower();
  static const PatternVariant& upper();
  static const PatternVariant& get(Variant v);

  Variant tag() const { return tag_; }
  // In the order they are listed; I not yet expanded in `source`.
  const std::vector<Alternative>& alternatives() const { return alternatives_; }

  // Author matches anchored at `start`, one per distinct end, longest first.
  // Each end reports the first listed alternative that reaches it.
  struct AnchoredMatch {
    std::size_t end = 0;
    std::size_t alternative = 0;
  };
  std::vector<AnchoredMatch> anchored(std::string_view codes,
                                      std::size_t start) const;

 private:
  PatternVariant(Variant tag, std::vector<std::string> alternatives);

  Variant tag_;
  std::vector<Alternative> alternatives_;
};

// All non-overlapping leftmost-longest author matches.
std::vector<CodeMatch> match_authors(const CodeString& code,
                                     const PatternVariant& variant);
std::vector<CodeMatch> match_authors(std::string_view codes,
                                     const PatternVariant& variant);

// Every non-overlapping single author block, left to right.
std::vector<BlockMatch> match_single_block(const CodeString& code,
                                           const PatternVariant& variant);
std::vector<BlockMatch> match_single_block(std::string_view codes,
                                           const PatternVariant& variant);

inline constexpr std::size_t kDefaultMaxGapLines = 7;
inline constexpr std::size_t kDefaultMaxBlocks = 32;

// Number of "L[^L]*" lines that make up codes[from, to); `from` must be a line
// break (or from == to).
std::size_t count_lines(std::string_view codes, std::size_t from,
                        std::size_t to);

// Chains single blocks whose gaps span at most `max_gap_lines` lines (and at
// most `max_blocks` blocks per chain) and returns the chain with the most
// authors, the earliest one on ties. Empty when no block matches.
std::vector<BlockMatch> match_multi_block(
    const CodeString& code, const PatternVariant& variant,
    std::size_t max_gap_lines = kDefaultMaxGapLines,
    std::size_t max_blocks = kDefaultMaxBlocks);
std::vector<BlockMatch> match_multi_block(
    std::string_view codes, const PatternVariant& variant,
    std::size_t max_gap_lines = kDefaultMaxGapLines,
    std::size_t max_blocks = kDefaultMaxBlocks);

// A scape template split into the context before the masked names, the
// masked names themselves and the context after them.
struct ScapeRule {
  std::string id;
  std::string source;  // full template as written
  Pattern head;
  Pattern masked;
  Pattern tail;
};

// S1 aL+[nN]{1,2}, S2 a[nNw]&L+[nN]{1,2}, S3 :L+[nN]{1,2}, S4 [nN]*&L[nN]L.
const std::vector<ScapeRule>& scape_rules();

struct ScapeResult {
  std::string codes;
  // Whole-match spans of every rule application, in firing order.
  std::vector<CodeMatch> fired;
};

// Applies S1..S4 in order, repeatedly, until nothing changes; masked name
// symbols become 'w'.
ScapeResult apply_scape_masks(std::string_view codes);

struct MaskedCode {
  CodeString code;
  std::vector<CodeMatch> fired;
};
MaskedCode apply_scape_masks(const CodeString& code);

}  // namespace authorfield
