// Word lists used by the encoder: adparticles, personal particles and the
// common-name prefix lexicon, plus the builder that derives prefix lexicons
// from a list of author names and a list of common-word frequencies.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace authorfield {

// Malformed lexicon or frequency input. `line` is 1-based, 0 when the error
// is not tied to a line.
class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::size_t line, const std::string& message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// True when `entry` is non-empty and made of letters only. Hyphens and
// apostrophes count as letters inside a word, as they do in the encoder.
bool is_letter_word(std::string_view entry);

// An immutable, case-folded, deduplicated and sorted set of words.
class WordSet {
 public:
  WordSet() = default;
  // Folds and validates every entry; throws LexiconError on an empty entry or
  // one containing non-letters.
  explicit WordSet(std::span<const std::string> entries);
  WordSet(std::initializer_list<std::string_view> entries);

  // `word` must already be case-folded.
  bool contains(std::string_view word) const;
  // Some entry is a prefix of `word` (case-folded).
  bool has_prefix_of(std::string_view word) const;
  // `prefix` (case-folded) is a prefix of some entry.
  bool is_prefix_of_any(std::string_view prefix) const;

  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::string> entries_;
};

struct LexiconSet {
  WordSet adparticles;
  WordSet personal_particles;
  WordSet prefixes;

  // The lexicons shipped in data/, compiled into the library.
  static const LexiconSet& defaults();
  // Shipped prefix lexicon in file order (most frequent first).
  static std::vector<std::string> default_prefix_entries();
};

// Parses the line-oriented lexicon format: one entry per line, '#' starts a
// comment, surrounding whitespace trimmed, blank lines skipped, LF or CRLF.
// Entries come back case-folded and deduplicated in file order.
std::vector<std::string> load_lexicon(std::string_view source);

struct PrefixCandidate {
  std::string word;  // case-folded
  std::uint64_t frequency = 0;
};

// Parses "word<TAB>count" lines with the same comment and blank-line rules as
// load_lexicon.
std::vector<PrefixCandidate> load_frequency_list(std::string_view source);

// Shortest prefix of `word` (counted in code points) that does not begin any
// name in `author_names`; nullopt when every prefix of `word`, the whole word
// included, begins some author name.
std::optional<std::string> shortest_nonauthor_prefix(
    std::string_view word, const WordSet& author_names);

struct PrefixEntry {
  std::string prefix;
  std::uint64_t frequency = 0;

  friend bool operator==(const PrefixEntry&, const PrefixEntry&) = default;
};

// Maps every candidate to its shortest non-author prefix, accumulates the
// candidate frequencies per prefix and keeps the `top_k` most frequent
// prefixes. Ties are broken lexicographically.
std::vector<PrefixEntry> build_prefix_lexicon(
    std::span<const PrefixCandidate> candidates, const WordSet& author_names,
    std::size_t top_k);

}  // namespace authorfield
