#include "authorfield/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_set>

#include "authorfield/unicode.hpp"

namespace authorfield {

namespace internal {
extern const std::string_view kDefaultAdparticles;
extern const std::string_view kDefaultParticles;
extern const std::string_view kDefaultPrefixes;
}  // namespace internal

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, content) for every non-blank line with comments and
// surrounding whitespace removed.
template <typename Fn>
void for_each_entry(std::string_view source, Fn&& fn) {
  std::size_t line_number = 0;
  while (!source.empty()) {
    ++line_number;
    const auto newline = source.find('\n');
    std::string_view line = source.substr(0, newline);
    source = newline == std::string_view::npos ? std::string_view{}
                                               : source.substr(newline + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) fn(line_number, line);
  }
}

}  // namespace

LexiconError::LexiconError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " +
                                         message),
      line_(line) {}

bool is_letter_word(std::string_view entry) {
  if (entry.empty()) return false;
  bool has_letter = false;
  for (std::size_t i = 0; i < entry.size();) {
    const auto d = unicode::decode(entry, i);
    if (!d.valid) return false;
    const char32_t c = d.code_point;
    if (unicode::is_letter(c)) {
      has_letter = true;
    } else if (!(unicode::is_combining_mark(c) || unicode::is_hyphen(c) ||
                 unicode::is_apostrophe(c))) {
      return false;
    }
    i += d.length;
  }
  return has_letter;
}

WordSet::WordSet(std::span<const std::string> entries) {
  entries_.reserve(entries.size());
  for (const auto& entry : entries) {
    if (!is_letter_word(entry)) {
      throw LexiconError(0, "invalid lexicon entry '" + entry + "'");
    }
    entries_.push_back(unicode::fold_case(entry));
  }
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()),
                 entries_.end());
}

WordSet::WordSet(std::initializer_list<std::string_view> entries)
    : WordSet(std::vector<std::string>(entries.begin(), entries.end())) {}

bool WordSet::contains(std::string_view word) const {
  return std::binary_search(entries_.begin(), entries_.end(), word);
}

bool WordSet::has_prefix_of(std::string_view word) const {
  // Only prefixes ending on a code point boundary can be entries.
  for (std::size_t i = 0; i < word.size();) {
    i += unicode::decode(word, i).length;
    if (contains(word.substr(0, i))) return true;
  }
  return false;
}

bool WordSet::is_prefix_of_any(std::string_view prefix) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), prefix);
  return it != entries_.end() && std::string_view(*it).starts_with(prefix);
}

const LexiconSet& LexiconSet::defaults() {
  static const LexiconSet kDefaults = [] {
    LexiconSet set;
    set.adparticles = WordSet(load_lexicon(internal::kDefaultAdparticles));
    set.personal_particles =
        WordSet(load_lexicon(internal::kDefaultParticles));
    set.prefixes = WordSet(load_lexicon(internal::kDefaultPrefixes));
    return set;
  }();
  return kDefaults;
}

std::vector<std::string> LexiconSet::default_prefix_entries() {
  return load_lexicon(internal::kDefaultPrefixes);
}

std::vector<std::string> load_lexicon(std::string_view source) {
  std::vector<std::string> entries;
  std::unordered_set<std::string> seen;
  for_each_entry(source, [&](std::size_t line, std::string_view entry) {
    if (!is_letter_word(entry)) {
      throw LexiconError(line, "entry '" + std::string(entry) +
                                   "' contains non-letter characters");
    }
    std::string folded = unicode::fold_case(entry);
    if (seen.insert(folded).second) entries.push_back(std::move(folded));
  });
  return entries;
}

std::vector<PrefixCandidate> load_frequency_list(std::string_view source) {
  std::vector<PrefixCandidate> candidates;
  for_each_entry(source, [&](std::size_t line, std::string_view entry) {
    const auto tab = entry.find('\t');
    if (tab == std::string_view::npos) {
      throw LexiconError(line, "expected 'word<TAB>count'");
    }
    const std::string_view word = trim(entry.substr(0, tab));
    const std::string_view count = trim(entry.substr(tab + 1));
    if (!is_letter_word(word)) {
      throw LexiconError(line, "word '" + std::string(word) +
                                   "' contains non-letter characters");
    }
    std::uint64_t frequency = 0;
    const auto [end, ec] =
        std::from_chars(count.data(), count.data() + count.size(), frequency);
    if (ec != std::errc{} || end != count.data() + count.size()) {
      throw LexiconError(line, "invalid count '" + std::string(count) + "'");
    }
    candidates.push_back({unicode::fold_case(word), frequency});
  });
  return candidates;
}

std::optional<std::string> shortest_nonauthor_prefix(
    std::string_view word, const WordSet& author_names) {
  for (std::size_t i = 0; i < word.size();) {
    i += unicode::decode(word, i).length;
    const std::string_view prefix = word.substr(0, i);
    if (!author_names.is_prefix_of_any(prefix)) return std::string(prefix);
  }
  return std::nullopt;
}

std::vector<PrefixEntry> build_prefix_lexicon(
    std::span<const PrefixCandidate> candidates, const WordSet& author_names,
    std::size_t top_k) {
  if (top_k == 0) return {};
  std::map<std::string, std::uint64_t> totals;
  for (const auto& candidate : candidates) {
    if (candidate.word.empty()) continue;
    if (auto prefix = shortest_nonauthor_prefix(candidate.word, author_names)) {
      totals[*prefix] += candidate.frequency;
    }
  }
  std::vector<PrefixEntry> entries;
  entries.reserve(totals.size());
  for (auto& [prefix, frequency] : totals) {
    entries.push_back({prefix, frequency});
  }
  // std::map iteration is already lexicographic; a stable sort on frequency
  // keeps that order among ties.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const PrefixEntry& a, const PrefixEntry& b) {
                     return a.frequency > b.frequency;
                   });
  if (entries.size() > top_k) entries.resize(top_k);
  return entries;
}

}  // namespace authorfield
