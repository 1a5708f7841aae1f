#include "authorfield/encoder.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace authorfield {
namespace {

EncoderConfig plain_config() {
  EncoderConfig config = EncoderConfig::defaults();
  config.prefixes = WordSet{};
  return config;
}

std::string codes_of(std::string_view text,
                     const EncoderConfig& config = EncoderConfig::defaults()) {
  return encode(text, config).codes();
}

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.emplace_back(t.text);
  return out;
}

TEST(ClassifyWord, TableOfExamples) {
  const EncoderConfig config = plain_config();
  EXPECT_EQ(classify_word("Newton", config), Symbol::kName);
  EXPECT_EQ(classify_word("NEWTON", config), Symbol::kNameUpper);
  EXPECT_EQ(classify_word("of", config), Symbol::kAdparticle);
  EXPECT_EQ(classify_word("and", config), Symbol::kAnd);
  EXPECT_EQ(classify_word("eV", config), Symbol::kWord);
  EXPECT_EQ(classify_word("B", config), Symbol::kInitial);
  EXPECT_EQ(classify_word("x", config), Symbol::kWord);
  EXPECT_EQ(classify_word("McDonald", config), Symbol::kName);
  EXPECT_EQ(classify_word("Émile", config), Symbol::kName);
  EXPECT_EQ(classify_word("ÉCOLE", config), Symbol::kNameUpper);
  EXPECT_EQ(classify_word("Hartree-Fock", config), Symbol::kName);
}

TEST(ClassifyWord, AdparticlesIgnoreCase) {
  const EncoderConfig config = plain_config();
  for (const char* w : {"of", "Of", "OF", "oF"}) {
    EXPECT_EQ(classify_word(w, config), Symbol::kAdparticle) << w;
  }
  for (const char* w : {"and", "And", "AND"}) {
    EXPECT_EQ(classify_word(w, config), Symbol::kAnd) << w;
  }
}

TEST(ClassifyWord, RejectsEmptyWord) {
  EXPECT_THROW(classify_word("", plain_config()), std::invalid_argument);
}

TEST(ClassifyLoweredWord, OnlyLowercaseOutcomes) {
  const EncoderConfig config = plain_config();
  EXPECT_EQ(classify_lowered_word("Open", config), Symbol::kWord);
  EXPECT_EQ(classify_lowered_word("OF", config), Symbol::kAdparticle);
  EXPECT_EQ(classify_lowered_word("And", config), Symbol::kAnd);
}

TEST(Tokenize, WordsPunctuationAndBreaks) {
  const std::string text = "J. R.\tR. Tolkien,\r\nOxford; (UK)";
  const auto tokens = tokenize(text, plain_config());
  EXPECT_EQ(token_texts(tokens),
            (std::vector<std::string>{"J", ".", "R", ".", "R", ".", "Tolkien",
                                      ",", "\r\n", "Oxford", ";", "(", "UK",
                                      ")"}));
  for (const auto& t : tokens) {
    EXPECT_EQ(text.substr(t.span.start, t.span.size()), t.text);
  }
}

TEST(Tokenize, JoinersOnlyBetweenLetters) {
  const auto tokens = tokenize("Hartree-Fock O'Brien - x- 'quoted'",
                               plain_config());
  EXPECT_EQ(token_texts(tokens),
            (std::vector<std::string>{"Hartree-Fock", "O'Brien", "-", "x", "-",
                                      "'", "quoted", "'"}));
}

TEST(Tokenize, ApostropheCanBeDisabled) {
  EncoderConfig config = plain_config();
  config.apostrophe_is_letter = false;
  EXPECT_EQ(token_texts(tokenize("O'Brien", config)),
            (std::vector<std::string>{"O", "'", "Brien"}));
}

TEST(AnnexParticles, MergesIntoFollowingWord) {
  const EncoderConfig config = plain_config();
  const std::string text = "Vincent van Gogh";
  const auto tokens =
      annex_personal_particles(tokenize(text, config), config);
  EXPECT_EQ(token_texts(tokens),
            (std::vector<std::string>{"Vincent", "van Gogh"}));
  EXPECT_EQ(tokens[1].code, Symbol::kName);
}

TEST(AnnexParticles, NoParticlesIsIdentity) {
  const EncoderConfig config = plain_config();
  const std::string text = "Isaac Newton";
  EXPECT_EQ(token_texts(annex_personal_particles(tokenize(text, config),
                                                 config)),
            (std::vector<std::string>{"Isaac", "Newton"}));
}

TEST(AnnexParticles, RunOfParticles) {
  EncoderConfig config = plain_config();
  config.personal_particles = WordSet{"da", "della"};
  const std::string text = "Leonardo da della Vinci";
  EXPECT_EQ(token_texts(annex_personal_particles(tokenize(text, config),
                                                 config)),
            (std::vector<std::string>{"Leonardo", "da della Vinci"}));
}

TEST(AnnexParticles, TrailingParticleStaysAlone) {
  const EncoderConfig config = plain_config();
  const std::string text = "Gogh van\nTheo";
  const auto tokens = annex_personal_particles(tokenize(text, config), config);
  EXPECT_EQ(token_texts(tokens),
            (std::vector<std::string>{"Gogh", "van", "\n", "Theo"}));
  EXPECT_EQ(tokens[1].code, Symbol::kWord);
}

TEST(PrefixLowercasing, OpenAccessAndEmailAlerts) {
  EncoderConfig config = plain_config();
  config.prefixes = WordSet{"open"};
  EXPECT_EQ(codes_of("Open Access", config), "LwnL");
  config.prefixes = WordSet{"email"};
  EXPECT_EQ(codes_of("Email Alerts", config), "LwnL");
  EXPECT_EQ(codes_of("Open Access", plain_config()), "LnnL");
}

TEST(PrefixLowercasing, EmptyLexiconIsIdentity) {
  EXPECT_EQ(codes_of("Newton", plain_config()), "LnL");
}

TEST(PrefixLowercasing, MarksLoweredTokens) {
  EncoderConfig config = plain_config();
  config.prefixes = WordSet{"ope"};
  const Encoding e = encode_detailed("OPEN Access", config);
  ASSERT_EQ(e.tokens.size(), 2u);
  EXPECT_TRUE(e.tokens[0].lowered);
  EXPECT_EQ(e.tokens[0].code, Symbol::kWord);
  EXPECT_FALSE(e.tokens[1].lowered);
}

TEST(Encode, WorkedExamples) {
  const EncoderConfig config = plain_config();
  EXPECT_EQ(codes_of("Philosophiæ Naturalis Principia Mathematica\nIsaac "
                     "Newton",
                     config),
            "LnnnnLnnL");
  EXPECT_EQ(codes_of("", config), "L");
  EXPECT_EQ(codes_of("J. R. R. Tolkien", config), "LIpIpIpnL");
  EXPECT_EQ(codes_of("Nonlinear Theory of\nShallow Shells", config),
            "LnnaLnnL");
}

TEST(Encode, PunctuationAndOthers) {
  const EncoderConfig config = plain_config();
  EXPECT_EQ(codes_of("a, b; c: d. e & f and g (h) 12", config),
            "Lw,w;w:wpw&w&wowoooL");
  EXPECT_EQ(codes_of("\n\nX\n", config), "LLIL");
  EXPECT_EQ(codes_of("\r\n", config), "L");
  EXPECT_EQ(codes_of("中文", config), "LwL");  // caseless letters
  EXPECT_EQ(codes_of("© 1687", config), "LoooooL");
}

TEST(Encode, SpansPointIntoSource) {
  const std::string text = "Isaac  Newton\n";
  const CodeString code = encode(text, plain_config());
  ASSERT_EQ(code.codes(), "LnnL");
  EXPECT_EQ(code.spans()[0], (Span{0, 0}));
  EXPECT_EQ(code.slice(1), "Isaac");
  EXPECT_EQ(code.slice(2), "Newton");
  EXPECT_EQ(code.slice(3), "\n");
  EXPECT_EQ(code.slice(1, 3), "Isaac  Newton");
  EXPECT_EQ(code.source_span(1, 3), (Span{0, 13}));
}

TEST(Encode, InvalidUtf8IsFlaggedAndEncodedAsOther) {
  const Encoding e = encode_detailed("Isaac \xFF Newton", plain_config());
  EXPECT_TRUE(e.invalid_utf8);
  EXPECT_EQ(e.code.codes(), "LnonL");
}

TEST(CodeStringTest, WithCodesKeepsSpans) {
  const CodeString code = encode("Isaac Newton", plain_config());
  const CodeString other = code.with_codes("LwwL");
  EXPECT_EQ(other.codes(), "LwwL");
  EXPECT_EQ(other.spans(), code.spans());
  EXPECT_EQ(&other.source(), &code.source());
}

class EncoderProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{12345};
  EncoderConfig config_ = EncoderConfig::defaults();
};

TEST_F(EncoderProperty, AlphabetBoundaryAndSpanLaws) {
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string text = testing::random_text(rng_, 40, true);
    const CodeString code = encode(text, config_);
    ASSERT_FALSE(code.codes().empty());
    EXPECT_EQ(code.codes().front(), 'L');
    EXPECT_EQ(code.codes().back(), 'L');
    EXPECT_EQ(code.spans().size(), code.size());
    for (const char c : code.codes()) EXPECT_TRUE(is_symbol(c)) << c;
    for (std::size_t i = 0; i < code.size(); ++i) {
      const Span s = code.spans()[i];
      EXPECT_LE(s.start, s.end);
      EXPECT_LE(s.end, text.size());
      if (i > 0) EXPECT_LE(code.spans()[i - 1].end, s.start);
    }
  }
}

TEST_F(EncoderProperty, EverySymbolRoundTrips) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string text = testing::random_text(rng_, 30, true);
    const CodeString code = encode(text, config_);
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code.spans()[i].empty()) continue;  // boundary line break
      const std::string again = encode(code.slice(i), config_).codes();
      const std::string expected =
          code[i] == 'L' ? std::string("L") : "L" + std::string(1, code[i]) + "L";
      EXPECT_EQ(again, expected)
          << "symbol " << i << " of [" << text << "]: [" << code.slice(i)
          << "]";
    }
  }
}

TEST_F(EncoderProperty, PreprocessingIsIdempotent) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string text = testing::random_text(rng_, 30, false);
    const auto tokens = tokenize(text, config_);
    const auto once = annex_personal_particles(tokens, config_);
    const auto twice = annex_personal_particles(once, config_);
    EXPECT_EQ(token_texts(once), token_texts(twice));
    const auto lowered = apply_prefix_lowercasing(once, config_);
    const auto lowered_twice = apply_prefix_lowercasing(lowered, config_);
    ASSERT_EQ(lowered.size(), lowered_twice.size());
    for (std::size_t i = 0; i < lowered.size(); ++i) {
      EXPECT_EQ(lowered[i].code, lowered_twice[i].code);
      EXPECT_EQ(lowered[i].lowered, lowered_twice[i].lowered);
    }
  }
}

TEST_F(EncoderProperty, Deterministic) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text = testing::random_text(rng_, 30, true);
    const CodeString a = encode(text, config_);
    const CodeString b = encode(text, config_);
    EXPECT_EQ(a.codes(), b.codes());
    EXPECT_EQ(a.spans(), b.spans());
  }
}

}  // namespace
}  // namespace authorfield
