#include "authorfield/templates.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

namespace authorfield {
namespace {

using testing::OracleAuthor;
using testing::OracleBlock;

// Shortest code string matching an alternative: I stays a bare initial and
// each class takes its first member.
std::string minimal_instance(std::string_view alternative) {
  std::string out;
  for (std::size_t i = 0; i < alternative.size(); ++i) {
    if (alternative[i] == '[') {
      out += alternative[i + 1];
      i = alternative.find(']', i);
    } else {
      out += alternative[i];
    }
  }
  return out;
}

std::vector<OracleBlock> as_oracle(const std::vector<BlockMatch>& blocks) {
  std::vector<OracleBlock> out;
  for (const auto& b : blocks) {
    OracleBlock o{b.block_span.start, b.block_span.end, {}};
    for (const auto& a : b.authors) o.authors.emplace_back(a.start, a.end);
    out.push_back(std::move(o));
  }
  return out;
}

TEST(PatternVariant, ListsElevenAlternativesEach) {
  for (const Variant v : {Variant::kLower, Variant::kUpper}) {
    const auto& alts = PatternVariant::get(v).alternatives();
    ASSERT_EQ(alts.size(), 11u);
    for (std::size_t i = 0; i < alts.size(); ++i) {
      EXPECT_EQ(alts[i].source, testing::alternatives(v)[i]);
      EXPECT_EQ(alts[i].id,
                std::string(to_string(v)) + ":" + testing::alternatives(v)[i]);
    }
  }
}

TEST(MatchAuthors, Examples) {
  const auto& lower = PatternVariant::lower();
  const auto& upper = PatternVariant::upper();
  EXPECT_EQ(match_authors("LnnL", lower),
            (std::vector<CodeMatch>{{1, 3, MatchKind::kAuthor, "lower:nn"}}));
  EXPECT_EQ(match_authors("LIpnL", lower),
            (std::vector<CodeMatch>{{1, 4, MatchKind::kAuthor, "lower:In"}}));
  EXPECT_EQ(
      match_authors("LNIpNL", upper),
      (std::vector<CodeMatch>{{1, 5, MatchKind::kAuthor, "upper:[nN]IN"}}));
  EXPECT_TRUE(match_authors("LwwL", lower).empty());
  EXPECT_TRUE(match_authors("LwwL", upper).empty());
}

TEST(MatchAuthors, LongestAlternativeWins) {
  const auto matches = match_authors("LnnInL", PatternVariant::lower());
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].rule_id, "lower:nnIn");
  EXPECT_EQ(matches[0].end - matches[0].start, 4u);
}

TEST(MatchAuthors, EveryAlternativeInIsolation) {
  for (const Variant v : {Variant::kLower, Variant::kUpper}) {
    for (const auto& alt : testing::alternatives(v)) {
      const std::string codes = "L" + minimal_instance(alt) + "L";
      const auto matches = match_authors(codes, PatternVariant::get(v));
      ASSERT_EQ(matches.size(), 1u) << codes;
      EXPECT_EQ(matches[0].start, 1u);
      EXPECT_EQ(matches[0].end, codes.size() - 1);
      EXPECT_EQ(matches[0].rule_id, std::string(to_string(v)) + ":" + alt);
      EXPECT_EQ(match_single_block(codes, PatternVariant::get(v)).size(), 1u);
    }
  }
}

TEST(MatchAuthors, InvalidPatternHasNoMatch) {
  for (const Variant v : {Variant::kLower, Variant::kUpper}) {
    EXPECT_TRUE(match_authors("LwnL", PatternVariant::get(v)).empty());
    EXPECT_TRUE(match_single_block("LwnL", PatternVariant::get(v)).empty());
  }
}

TEST(MatchSingleBlock, Examples) {
  const auto& lower = PatternVariant::lower();
  auto blocks = match_single_block("Lnn,nn&nnL", lower);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].author_count(), 3u);
  EXPECT_EQ(blocks[0].block_span.start, 0u);
  EXPECT_EQ(blocks[0].block_span.end, 9u);
  ASSERT_EQ(blocks[0].separators.size(), 2u);
  EXPECT_EQ(blocks[0].separators[1].start, 6u);

  blocks = match_single_block("LnnLnnL", lower);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].author_count(), 2u);

  EXPECT_TRUE(match_single_block("LwnwL", lower).empty());
}

TEST(MatchSingleBlock, RequiresTrailingLineBreak) {
  EXPECT_TRUE(match_single_block("Lnn", PatternVariant::lower()).empty());
  EXPECT_TRUE(match_single_block("Lnn,L", PatternVariant::lower()).empty());
  EXPECT_TRUE(match_single_block("nnL", PatternVariant::lower()).empty());
}

TEST(MatchSingleBlock, TrailingBreakStartsNextBlock) {
  const auto blocks = match_single_block("LnnLwLnnL", PatternVariant::lower());
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].block_span.end, 3u);
  EXPECT_EQ(blocks[1].block_span.start, 5u);
}

TEST(CountLines, CountsLineSegments) {
  EXPECT_EQ(count_lines("LnnLwwwLnnL", 3, 7), 1u);
  EXPECT_EQ(count_lines("LnnLwLwL", 3, 7), 2u);
  EXPECT_EQ(count_lines("LnnL", 3, 3), 0u);
}

TEST(MatchMultiBlock, ChainsAcrossAddressLine) {
  const auto chain = match_multi_block("LnnLwwwLnnL", PatternVariant::lower());
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[0].author_count() + chain[1].author_count(), 2u);
}

std::string with_gap(std::size_t gap_lines) {
  std::string codes = "Lnn,nnL";
  for (std::size_t i = 1; i < gap_lines; ++i) codes += "wwL";
  codes += "ww";  // last gap line, then the next block's break
  codes += "LnnL";
  return codes;
}

TEST(MatchMultiBlock, GapLimitBoundary) {
  const auto& lower = PatternVariant::lower();
  EXPECT_EQ(match_multi_block(with_gap(7), lower, 7).size(), 2u);
  const auto split = match_multi_block(with_gap(8), lower, 7);
  ASSERT_EQ(split.size(), 1u);
  EXPECT_EQ(split[0].block_span.start, 0u);
  EXPECT_EQ(match_multi_block(with_gap(8), lower, 8).size(), 2u);
  EXPECT_EQ(match_multi_block(with_gap(1), lower, 0).size(), 1u);
}

TEST(MatchMultiBlock, PrefersMostAuthorsThenEarliest) {
  const auto& lower = PatternVariant::lower();
  // Two chains separated by nine lines; the second has more authors.
  std::string codes = "LnnL";
  for (int i = 0; i < 9; ++i) codes += "wL";
  codes += "nn,nnL";
  auto chain = match_multi_block(codes, lower);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0].author_count(), 2u);

  codes = "LnnL";
  for (int i = 0; i < 9; ++i) codes += "wL";
  codes += "nnL";
  chain = match_multi_block(codes, lower);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0].block_span.start, 0u);
}

TEST(MatchMultiBlock, BlockLimitSplitsChains) {
  std::string codes = "L";
  for (int i = 0; i < 5; ++i) codes += "nnLwL";
  EXPECT_EQ(match_multi_block(codes, PatternVariant::lower(), 7, 32).size(),
            5u);
  EXPECT_EQ(match_multi_block(codes, PatternVariant::lower(), 7, 2).size(), 2u);
  EXPECT_TRUE(match_multi_block(codes, PatternVariant::lower(), 7, 0).empty());
  EXPECT_TRUE(match_multi_block("LwL", PatternVariant::lower()).empty());
}

TEST(ScapeMasks, TableExamples) {
  struct Case {
    const char* codes;
    const char* masked;
    const char* rule;
  };
  for (const Case c : {Case{"LnnaLnnL", "LnnaLwwL", "S1"},
                       Case{"Lnnan&LnnL", "Lnnan&LwwL", "S2"},
                       Case{"Ln&n:LnnL", "Ln&n:LwwL", "S3"},
                       Case{"Lnnn&LnL", "Lnnn&LwL", "S4"}}) {
    const ScapeResult r = apply_scape_masks(c.codes);
    EXPECT_EQ(r.codes, c.masked) << c.codes;
    ASSERT_FALSE(r.fired.empty()) << c.codes;
    EXPECT_EQ(r.fired.front().rule_id, c.rule) << c.codes;
  }
}

TEST(ScapeMasks, NoContextNoChange) {
  const ScapeResult r = apply_scape_masks("LnnL");
  EXPECT_EQ(r.codes, "LnnL");
  EXPECT_TRUE(r.fired.empty());
}

TEST(ScapeMasks, MasksAtMostTwoNames) {
  EXPECT_EQ(apply_scape_masks("LnaLnnnL").codes, "LnaLwwnL");
}

TEST(ScapeMasks, CodeStringVersionKeepsSpans) {
  const CodeString code = encode("Theory of\nShallow Shells",
                                 EncoderConfig::from_lexicons(LexiconSet{
                                     WordSet{"of"}, WordSet{}, WordSet{}}));
  const MaskedCode masked = apply_scape_masks(code);
  EXPECT_EQ(masked.code.codes(), "LnaLwwL");
  EXPECT_EQ(masked.code.spans(), code.spans());
}

class TemplateProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{424242};
};

TEST_F(TemplateProperty, BlocksAgreeWithRegexOracle) {
  for (int trial = 0; trial < 5000; ++trial) {
    const std::string codes = testing::random_codes(rng_, 30);
    for (const Variant v : {Variant::kLower, Variant::kUpper}) {
      const auto blocks = match_single_block(codes, PatternVariant::get(v));
      ASSERT_EQ(as_oracle(blocks), testing::oracle_blocks(codes, v))
          << codes << " " << to_string(v);
    }
  }
}

TEST_F(TemplateProperty, AuthorsAgreeWithRegexOracle) {
  for (int trial = 0; trial < 1500; ++trial) {
    const std::string codes = testing::random_codes(rng_, 30);
    for (const Variant v : {Variant::kLower, Variant::kUpper}) {
      const auto& variant = PatternVariant::get(v);
      std::vector<OracleAuthor> got;
      for (const auto& m : match_authors(codes, variant)) {
        std::size_t k = 0;
        while (variant.alternatives()[k].id != m.rule_id) ++k;
        got.push_back({m.start, m.end, k});
      }
      ASSERT_EQ(got, testing::oracle_authors(codes, v)) << codes;
    }
  }
}

TEST_F(TemplateProperty, BlockLookaheadLeavesLineBreak) {
  for (int trial = 0; trial < 3000; ++trial) {
    const std::string codes = testing::random_codes(rng_, 30);
    for (const auto& b : match_single_block(codes, PatternVariant::lower())) {
      ASSERT_LT(b.block_span.end, codes.size());
      EXPECT_EQ(codes[b.block_span.end], 'L');
      EXPECT_EQ(codes[b.block_span.start], 'L');
    }
  }
}

TEST_F(TemplateProperty, MaskingIsSoundAndMonotone) {
  for (int trial = 0; trial < 3000; ++trial) {
    const std::string codes = testing::random_codes(rng_, 30);
    const ScapeResult r = apply_scape_masks(codes);
    ASSERT_EQ(r.codes.size(), codes.size());
    EXPECT_EQ(r.codes, testing::oracle_scape_masks(codes)) << codes;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (r.codes[i] == codes[i]) continue;
      EXPECT_EQ(r.codes[i], 'w');
      const bool covered = std::any_of(
          r.fired.begin(), r.fired.end(),
          [&](const CodeMatch& m) { return m.start <= i && i < m.end; });
      EXPECT_TRUE(covered) << codes << " index " << i;
    }
    for (const Variant v : {Variant::kLower, Variant::kUpper}) {
      const auto& variant = PatternVariant::get(v);
      const std::set<std::pair<std::size_t, std::size_t>> unmasked = [&] {
        std::set<std::pair<std::size_t, std::size_t>> s;
        for (const auto& b : match_single_block(codes, variant)) {
          for (const auto& a : b.authors) s.emplace(a.start, a.end);
        }
        return s;
      }();
      for (const auto& b : match_single_block(r.codes, variant)) {
        for (const auto& a : b.authors) {
          EXPECT_TRUE(unmasked.contains({a.start, a.end})) << codes;
        }
      }
    }
  }
}

}  // namespace
}  // namespace authorfield
