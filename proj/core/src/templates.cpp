#include "authorfield/templates.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace authorfield {

namespace {

constexpr std::string_view kInitialExpansion = "Ip{0,1}";

const std::vector<std::string> kLowerAlternatives = {
    "nIn", "nIIn", "In",   "Inn",  "IIn", "IIIn",
    "nInn", "nnIn", "IInn", "nn",  "nnn",
};

const std::vector<std::string> kUpperAlternatives = {
    "[nN]IN",     "[nN]IIN",    "IN",       "I[nN]N",
    "IIN",        "IIIN",       "[nN]I[nN]N", "[nN]NIN",
    "II[nN]N",    "[nN]N",      "[nN][nN]N",
};

const Pattern& separator_pattern() {
  static const Pattern kSeparator = Pattern::compile("[,;&L]+");
  return kSeparator;
}

const Pattern& line_pattern() {
  static const Pattern kLine = Pattern::compile("L[^L]*");
  return kLine;
}

struct AuthorStep {
  std::size_t start;
  std::size_t end;
  std::size_t alternative;
};

// Backtracking evaluation of L A ([,;&L]+ A)* (?=L) at one position, with
// greedy repetition: the first successful path in priority order wins.
// Results per position are memoized since they do not depend on the path
// that reached them.
class BlockSearch {
 public:
  BlockSearch(std::string_view codes, const PatternVariant& variant)
      : codes_(codes), variant_(variant) {}

  std::optional<std::vector<AuthorStep>> at(std::size_t line) {
    if (line >= codes_.size() || codes_[line] != to_char(Symbol::kLine)) {
      return std::nullopt;
    }
    for (const auto& m : variant_.anchored(codes_, line + 1)) {
      if (auto rest = after_author(m.end)) {
        rest->insert(rest->begin(), AuthorStep{line + 1, m.end, m.alternative});
        return rest;
      }
    }
    return std::nullopt;
  }

 private:
  // Continuation after an author ending at `pos`.
  std::optional<std::vector<AuthorStep>> after_author(std::size_t pos) {
    if (auto it = memo_.find(pos); it != memo_.end()) return it->second;
    std::optional<std::vector<AuthorStep>> result;
    auto separators = separator_pattern().match_ends(codes_, pos);
    for (auto sep = separators.rbegin(); sep != separators.rend() && !result;
         ++sep) {
      if (*sep == pos) continue;
      for (const auto& m : variant_.anchored(codes_, *sep)) {
        if (auto rest = after_author(m.end)) {
          rest->insert(rest->begin(), AuthorStep{*sep, m.end, m.alternative});
          result = std::move(rest);
          break;
        }
      }
    }
    if (!result && pos < codes_.size() &&
        codes_[pos] == to_char(Symbol::kLine)) {
      result.emplace();
    }
    memo_.emplace(pos, result);
    return result;
  }

  std::string_view codes_;
  const PatternVariant& variant_;
  std::map<std::size_t, std::optional<std::vector<AuthorStep>>> memo_;
};

BlockMatch make_block(std::size_t line, const std::vector<AuthorStep>& steps,
                      const PatternVariant& variant) {
  BlockMatch block;
  block.block_span = CodeMatch{line, steps.back().end, MatchKind::kBlock,
                               "block"};
  std::size_t previous_end = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    if (i > 0) {
      block.separators.push_back(CodeMatch{previous_end, step.start,
                                           MatchKind::kBlock, "separator"});
    }
    block.authors.push_back(
        CodeMatch{step.start, step.end, MatchKind::kAuthor,
                  variant.alternatives()[step.alternative].id});
    previous_end = step.end;
  }
  return block;
}

}  // namespace

std::string_view to_string(Variant v) {
  return v == Variant::kLower ? "lower" : "upper";
}

PatternVariant::PatternVariant(Variant tag,
                               std::vector<std::string> alternatives)
    : tag_(tag) {
  for (const auto& source : alternatives) {
    alternatives_.push_back(Alternative{
        std::string(to_string(tag)) + ":" + source, source,
        Pattern::compile(expand_symbol(source, 'I', kInitialExpansion))});
  }
}

const PatternVariant& PatternVariant::lower() {
  static const PatternVariant kLower(Variant::kLower, kLowerAlternatives);
  return kLower;
}

const PatternVariant& PatternVariant::upper() {
  static const PatternVariant kUpper(Variant::kUpper, kUpperAlternatives);
  return kUpper;
}

const PatternVariant& PatternVariant::get(Variant v) {
  return v == Variant::kLower ? lower() : upper();
}

std::vector<PatternVariant::AnchoredMatch> PatternVariant::anchored(
    std::string_view codes, std::size_t start) const {
  // end -> first alternative reaching it
  std::map<std::size_t, std::size_t, std::greater<>> ends;
  for (std::size_t a = 0; a < alternatives_.size(); ++a) {
    for (const std::size_t end : alternatives_[a].pattern.match_ends(codes, start)) {
      if (end > start) ends.emplace(end, a);
    }
  }
  std::vector<AnchoredMatch> out;
  out.reserve(ends.size());
  for (const auto& [end, alternative] : ends) {
    out.push_back({end, alternative});
  }
  return out;
}

std::vector<CodeMatch> match_authors(std::string_view codes,
                                     const PatternVariant& variant) {
  std::vector<CodeMatch> matches;
  std::size_t pos = 0;
  while (pos < codes.size()) {
    const auto candidates = variant.anchored(codes, pos);
    if (candidates.empty()) {
      ++pos;
      continue;
    }
    const auto& best = candidates.front();
    matches.push_back(CodeMatch{pos, best.end, MatchKind::kAuthor,
                                variant.alternatives()[best.alternative].id});
    pos = best.end;
  }
  return matches;
}

std::vector<CodeMatch> match_authors(const CodeString& code,
                                     const PatternVariant& variant) {
  return match_authors(std::string_view(code.codes()), variant);
}

std::vector<BlockMatch> match_single_block(std::string_view codes,
                                           const PatternVariant& variant) {
  std::vector<BlockMatch> blocks;
  BlockSearch search(codes, variant);
  std::size_t pos = 0;
  while (pos < codes.size()) {
    if (auto steps = search.at(pos)) {
      blocks.push_back(make_block(pos, *steps, variant));
      // The trailing line break stays available to the next block.
      pos = blocks.back().block_span.end;
    } else {
      ++pos;
    }
  }
  return blocks;
}

std::vector<BlockMatch> match_single_block(const CodeString& code,
                                           const PatternVariant& variant) {
  return match_single_block(std::string_view(code.codes()), variant);
}

std::size_t count_lines(std::string_view codes, std::size_t from,
                        std::size_t to) {
  std::size_t lines = 0;
  const std::string_view range = codes.substr(0, to);
  while (from < to) {
    const auto end = line_pattern().longest_match(range, from);
    if (!end || *end == from) break;
    from = *end;
    ++lines;
  }
  return lines;
}

std::vector<BlockMatch> match_multi_block(std::string_view codes,
                                          const PatternVariant& variant,
                                          std::size_t max_gap_lines,
                                          std::size_t max_blocks) {
  const std::vector<BlockMatch> blocks = match_single_block(codes, variant);
  if (blocks.empty() || max_blocks == 0) return {};

  auto author_total = [](std::span<const BlockMatch> chain) {
    std::size_t total = 0;
    for (const auto& b : chain) total += b.author_count();
    return total;
  };

  std::size_t best_begin = 0;
  std::size_t best_end = 1;
  std::size_t chain_begin = 0;
  for (std::size_t i = 1; i <= blocks.size(); ++i) {
    const bool chained =
        i < blocks.size() && i - chain_begin < max_blocks &&
        count_lines(codes, blocks[i - 1].block_span.end,
                    blocks[i].block_span.start) <= max_gap_lines;
    if (chained) continue;
    const std::span<const BlockMatch> all(blocks);
    if (author_total(all.subspan(chain_begin, i - chain_begin)) >
        author_total(all.subspan(best_begin, best_end - best_begin))) {
      best_begin = chain_begin;
      best_end = i;
    }
    chain_begin = i;
  }
  return {blocks.begin() + static_cast<std::ptrdiff_t>(best_begin),
          blocks.begin() + static_cast<std::ptrdiff_t>(best_end)};
}

std::vector<BlockMatch> match_multi_block(const CodeString& code,
                                          const PatternVariant& variant,
                                          std::size_t max_gap_lines,
                                          std::size_t max_blocks) {
  return match_multi_block(std::string_view(code.codes()), variant,
                           max_gap_lines, max_blocks);
}

const std::vector<ScapeRule>& scape_rules() {
  static const std::vector<ScapeRule> kRules = [] {
    auto rule = [](std::string id, std::string source, std::string_view head,
                   std::string_view masked, std::string_view tail) {
      return ScapeRule{std::move(id), std::move(source), Pattern::compile(head),
                       Pattern::compile(masked), Pattern::compile(tail)};
    };
    std::vector<ScapeRule> rules;
    rules.push_back(rule("S1", "aL+[nN]{1,2}", "aL+", "[nN]{1,2}", ""));
    rules.push_back(
        rule("S2", "a[nNw]&L+[nN]{1,2}", "a[nNw]&L+", "[nN]{1,2}", ""));
    rules.push_back(rule("S3", ":L+[nN]{1,2}", ":L+", "[nN]{1,2}", ""));
    rules.push_back(rule("S4", "[nN]*&L[nN]L", "[nN]*&L", "[nN]", "L"));
    return rules;
  }();
  return kRules;
}

namespace {

struct ScapeHit {
  std::size_t end = 0;
  std::size_t mask_start = 0;
  std::size_t mask_end = 0;
};

// Longest match of `rule` anchored at `start`; among equally long matches the
// one masking the most symbols.
std::optional<ScapeHit> scape_at(const ScapeRule& rule, std::string_view codes,
                                 std::size_t start) {
  std::optional<ScapeHit> best;
  for (const std::size_t h : rule.head.match_ends(codes, start)) {
    for (const std::size_t m : rule.masked.match_ends(codes, h)) {
      if (m == h) continue;
      for (const std::size_t t : rule.tail.match_ends(codes, m)) {
        const ScapeHit hit{t, h, m};
        if (!best || hit.end > best->end ||
            (hit.end == best->end &&
             hit.mask_end - hit.mask_start >
                 best->mask_end - best->mask_start)) {
          best = hit;
        }
      }
    }
  }
  return best;
}

}  // namespace

ScapeResult apply_scape_masks(std::string_view input) {
  ScapeResult result{std::string(input), {}};
  std::string& codes = result.codes;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ScapeRule& rule : scape_rules()) {
      std::size_t pos = 0;
      while (pos < codes.size()) {
        const auto hit = scape_at(rule, codes, pos);
        if (!hit) {
          ++pos;
          continue;
        }
        for (std::size_t i = hit->mask_start; i < hit->mask_end; ++i) {
          codes[i] = to_char(Symbol::kWord);
        }
        result.fired.push_back(
            CodeMatch{pos, hit->end, MatchKind::kScapeMask, rule.id});
        changed = true;
        pos = hit->end;
      }
    }
  }
  return result;
}

MaskedCode apply_scape_masks(const CodeString& code) {
  ScapeResult result = apply_scape_masks(std::string_view(code.codes()));
  return MaskedCode{code.with_codes(std::move(result.codes)),
                    std::move(result.fired)};
}

}  // namespace authorfield
